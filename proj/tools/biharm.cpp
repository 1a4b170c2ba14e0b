// biharm: verification suites, (m, l) sweeps and single-surface residuals.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or config
// error, 3 I/O error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <string>

#include "biharm/verify/config.hpp"
#include "biharm/verify/report.hpp"
#include "biharm/verify/suites.hpp"
#include "biharm/verify/surfaces.hpp"
#include "biharm/verify/sweep.hpp"

namespace {

using namespace biharm;
using namespace biharm::verify;

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Explicit --out, else $BIHARM_OUT_DIR/<stem>.<format>, else stdout.
void emit(const SuiteConfig& config, const std::string& stem, const std::string& text) {
  std::string path;
  if (config.out) {
    path = *config.out;
  } else if (const char* dir = std::getenv("BIHARM_OUT_DIR"); dir && *dir) {
    path = (std::filesystem::path(dir) / (stem + "." + config.format)).string();
  }
  if (path.empty()) {
    std::cout << text;
    return;
  }
  try {
    write_text_file(path, text);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  std::cerr << "wrote " << path << "\n";
}

std::pair<double, double> parse_range(const std::string& text, const char* what) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument(std::string(what) + " must look like a:b");
  SuiteConfig scratch;
  apply_setting(scratch, "m", text.substr(0, colon));
  double a = *scratch.m;
  apply_setting(scratch, "m", text.substr(colon + 1));
  return {a, *scratch.m};
}

std::string residual_csv(const SurfacePatch& patch, const SuiteConfig& config) {
  std::string out = "u,v,H,normal,tangential,t0,t1,t2\n";
  const ResidualOptions ro = verdict_options(config).residual;
  for (const ParamPoint& q : grid_points(patch.domain(), config.grid)) {
    BiharmonicResidual r = residual_full(patch, q, ro);
    auto triple = r.chn_triple ? r.chn_triple : r.csl_triple;
    out += format_number(q.u) + ',' + format_number(q.v) + ',' + format_number(r.mean_curvature) + ',' +
           format_number(r.normal_residual) + ',' + format_number(r.tangential_residual);
    for (int i = 0; i < 3; ++i) out += ',' + (triple ? format_number((*triple)[i]) : std::string());
    out += '\n';
  }
  return out;
}

nlohmann::json residual_json(const SurfaceRequest& req, const SurfacePatch& patch, const SuiteConfig& config,
                             const Verdict& v) {
  const ResidualOptions ro = verdict_options(config).residual;
  nlohmann::json points = nlohmann::json::array();
  for (const ParamPoint& q : grid_points(patch.domain(), config.grid)) {
    BiharmonicResidual r = residual_full(patch, q, ro);
    nlohmann::json p = {{"u", q.u},
                        {"v", q.v},
                        {"H", r.mean_curvature},
                        {"normal", r.normal_residual},
                        {"tangential", r.tangential_residual}};
    if (r.chn_triple) p["chn"] = *r.chn_triple;
    if (r.csl_triple) p["csl"] = *r.csl_triple;
    points.push_back(p);
  }
  return {{"surface", req.name},
          {"model", patch.model().describe()},
          {"config", to_json(config)},
          {"classification", to_string(v.classification)},
          {"max_abs_h", v.max_abs_h},
          {"min_abs_h", v.min_abs_h},
          {"max_normal_residual", v.max_normal_residual},
          {"max_tangential_residual", v.max_tangential_residual},
          {"margin", v.margin},
          {"points", points}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of biharmonic surfaces in homogeneous 3-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, m, l, grid, tol, fd_step, seed, out, format;
  app.add_option("--config", config_path, "key=value file (flags override it)");
  app.add_option("--m", m, "BCV parameter m (suites: run only this setting)");
  app.add_option("--l", l, "BCV parameter l");
  app.add_option("--grid", grid, "sample grid NxM (default 5x5)");
  app.add_option("--tol", tol, "residual tolerance (default 1e-6)");
  app.add_option("--fd-step", fd_step, "difference step for H derivatives (default 1e-3)");
  app.add_option("--seed", seed, "seed for quasi-random sampling (default 0)");
  app.add_option("--out", out, "output file (default: $BIHARM_OUT_DIR/<name>.<format>, else stdout)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* suite_cmd = app.add_subcommand("suite", "run a named verification suite");
  std::string suite_name;
  suite_cmd->add_option("name", suite_name, "suite name")->required()->check(CLI::IsMember(suite_names()));

  auto* sweep_cmd = app.add_subcommand("sweep", "tabulate Hopf-cylinder invariants over an (m, l) grid");
  std::string m_range = "0:1", l_range = "0:2";
  int steps = 5;
  sweep_cmd->add_option("--m-range", m_range, "a:b (default 0:1)");
  sweep_cmd->add_option("--l-range", l_range, "a:b (default 0:2)");
  sweep_cmd->add_option("--steps", steps, "points per axis (default 5)")->check(CLI::PositiveNumber);

  auto* residual_cmd = app.add_subcommand("residual", "biharmonic residuals of one named surface");
  SurfaceRequest req;
  std::string expect;
  residual_cmd->add_option("surface", req.name, "surface name")->required()->check(CLI::IsMember(surface_names()));
  residual_cmd->add_option("--c", req.c, "space-form curvature (sphere)");
  residual_cmd->add_option("--radius", req.radius, "intrinsic radius (sphere) or chart radius (sol cylinders)");
  residual_cmd->add_option("--kappa", req.kappa, "geodesic curvature of the base circle (hopf-circle)");
  residual_cmd->add_option("--offset", req.offset, "plane offset (sol planes)");
  residual_cmd->add_option("--expect", expect, "exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"minimal", "proper_biharmonic", "not_biharmonic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  SuiteConfig config;
  try {
    if (!config_path.empty()) apply_config_file(config, config_path);
    const std::pair<const char*, const std::string*> flags[] = {{"m", &m},       {"l", &l},     {"grid", &grid},
                                                                 {"tol", &tol},   {"fd-step", &fd_step},
                                                                 {"seed", &seed}, {"out", &out}, {"format", &format}};
    for (auto [key, value] : flags)
      if (app.count(std::string("--") + key) > 0) apply_setting(config, key, *value);
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*suite_cmd) {
      SuiteReport report = run_suite(suite_name, config);
      std::string text = config.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
      emit(config, "suite-" + suite_name, text);
      for (const CheckRecord& c : report.checks)
        if (!c.pass)
          std::cerr << "FAIL " << c.id << ": " << format_number(c.residual) << " vs " << format_number(c.tol) << "\n";
      std::cerr << "suite " << suite_name << ": " << report.checks.size() - report.failures() << "/"
                << report.checks.size() << " checks passed (" << static_cast<long>(report.duration_ms) << " ms)\n";
      return report.passed() ? 0 : exit_fail;
    }
    if (*sweep_cmd) {
      SweepSpec spec;
      std::tie(spec.m0, spec.m1) = parse_range(m_range, "--m-range");
      std::tie(spec.l0, spec.l1) = parse_range(l_range, "--l-range");
      spec.steps = steps;
      auto rows = sweep(spec, config);
      std::string text = config.format == "csv" ? sweep_to_csv(rows) : sweep_to_json(rows, spec, config).dump(2) + "\n";
      emit(config, "sweep", text);
      return 0;
    }
    if (*residual_cmd) {
      if (config.m) req.m = *config.m;
      if (config.l) req.l = *config.l;
      SurfacePatch patch = named_surface(req);
      Verdict v = verdict(patch, config.grid, verdict_options(config));
      std::string text =
          config.format == "csv" ? residual_csv(patch, config) : residual_json(req, patch, config, v).dump(2) + "\n";
      emit(config, "residual-" + req.name, text);
      std::cerr << req.name << " in " << patch.model().describe() << ": " << to_string(v.classification) << "\n";
      return expect.empty() || expect == to_string(v.classification) ? 0 : exit_fail;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
  return exit_usage;
}
