#include "biharm/verify/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace biharm::verify {

CheckRecord check_at_most(std::string id, std::string desc, double value, double tol) {
  bool pass = value <= tol;
  return {std::move(id), std::move(desc), value, tol, pass, tol - value};
}

CheckRecord check_at_least(std::string id, std::string desc, double value, double floor) {
  bool pass = value >= floor;
  return {std::move(id), std::move(desc), value, floor, pass, value - floor};
}

CheckRecord check_condition(std::string id, std::string desc, bool pass, double residual, double tol, double margin) {
  return {std::move(id), std::move(desc), residual, tol, pass, margin};
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::size_t SuiteReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; });
}

namespace {

nlohmann::json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const CheckRecord& c) {
  return {{"id", c.id},           {"desc", c.desc}, {"residual", number(c.residual)},
          {"tol", number(c.tol)}, {"pass", c.pass}, {"margin", number(c.margin)}};
}

nlohmann::json to_json(const SuiteReport& report, bool with_duration) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) checks.push_back(to_json(c));
  nlohmann::json out = {{"suite", report.suite}, {"config", report.config}, {"checks", checks},
                        {"pass", report.passed()}};
  if (with_duration) out["duration_ms"] = report.duration_ms;
  return out;
}

std::string to_csv(const SuiteReport& report) {
  std::string out = "id,desc,residual,tol,pass,margin\n";
  for (const CheckRecord& c : report.checks) {
    out += csv_field(c.id) + ',' + csv_field(c.desc) + ',' + format_number(c.residual) + ',' + format_number(c.tol) +
           ',' + (c.pass ? "true" : "false") + ',' + format_number(c.margin) + '\n';
  }
  return out;
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace biharm::verify
