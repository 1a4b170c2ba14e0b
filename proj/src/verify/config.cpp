#include "biharm/verify/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace biharm::verify {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view key, std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
    throw InvalidArgument("invalid value for " + std::string(key) + ": '" + std::string(text) + "'");
  return v;
}

double parse_positive(std::string_view key, std::string_view text) {
  double v = parse_real(key, text);
  if (!(v > 0.0)) throw InvalidArgument(std::string(key) + " must be positive");
  return v;
}

}  // namespace

GridSpec parse_grid(std::string_view text) {
  text = trim(text);
  auto x = text.find_first_of("xX");
  auto bad = [&] { return InvalidArgument("grid must look like NxM with N, M >= 1, got '" + std::string(text) + "'"); };
  if (x == std::string_view::npos) throw bad();
  GridSpec g;
  auto a = text.substr(0, x), b = text.substr(x + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), g.nu);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), g.nv);
  if (r1.ec != std::errc{} || r1.ptr != a.data() + a.size() || r2.ec != std::errc{} || r2.ptr != b.data() + b.size())
    throw bad();
  if (g.nu < 1 || g.nv < 1 || g.nu > 1000 || g.nv > 1000) throw bad();
  return g;
}

void apply_setting(SuiteConfig& c, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "m") {
    c.m = parse_real(key, value);
  } else if (key == "l") {
    c.l = parse_real(key, value);
  } else if (key == "grid") {
    c.grid = parse_grid(value);
  } else if (key == "tol") {
    c.tol = parse_positive(key, value);
  } else if (key == "fd-step" || key == "fd_step") {
    c.fd_step = parse_positive(key, value);
    if (!(c.fd_step < 0.1)) throw InvalidArgument("fd-step must be below 0.1");
  } else if (key == "seed") {
    std::uint64_t s = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw InvalidArgument("seed must be a nonnegative integer, got '" + std::string(value) + "'");
    c.seed = s;
  } else if (key == "format") {
    if (value != "json" && value != "csv") throw InvalidArgument("format must be json or csv");
    c.format = std::string(value);
  } else if (key == "out") {
    c.out = std::string(value);
  } else {
    throw InvalidArgument("unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_text(SuiteConfig& config, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key=value");
    apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
  }
}

void apply_config_file(SuiteConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(config, buf.str());
}

VerdictOptions verdict_options(const SuiteConfig& config) {
  VerdictOptions v;
  v.tol = config.tol;
  v.residual.differences.step = config.fd_step;
  return v;
}

nlohmann::json to_json(const SuiteConfig& c) {
  nlohmann::json j = {{"grid", std::to_string(c.grid.nu) + "x" + std::to_string(c.grid.nv)},
                      {"tol", c.tol},
                      {"fd_step", c.fd_step},
                      {"richardson", true},
                      {"seed", c.seed}};
  j["m"] = c.m ? nlohmann::json(*c.m) : nlohmann::json(nullptr);
  j["l"] = c.l ? nlohmann::json(*c.l) : nlohmann::json(nullptr);
  return j;
}

}  // namespace biharm::verify
