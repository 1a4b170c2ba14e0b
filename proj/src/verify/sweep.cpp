#include "biharm/verify/sweep.hpp"

#include <cmath>

#include "biharm/verify/report.hpp"
#include "biharm/verify/surfaces.hpp"

namespace biharm::verify {

namespace {

double axis_value(double a, double b, int i, int steps) { return steps == 1 ? a : a + (b - a) * i / (steps - 1); }

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec, const SuiteConfig& config) {
  for (double v : {spec.m0, spec.m1, spec.l0, spec.l1})
    if (!std::isfinite(v)) throw InvalidArgument("sweep ranges must be finite");
  if (spec.steps < 1) throw InvalidArgument("sweep steps must be >= 1");
  const VerdictOptions vo = verdict_options(config);

  const int nm = spec.m0 == spec.m1 ? 1 : spec.steps;
  const int nl = spec.l0 == spec.l1 ? 1 : spec.steps;
  std::vector<SweepRow> rows;
  for (int i = 0; i < nm; ++i) {
    for (int j = 0; j < nl; ++j) {
      SweepRow row;
      row.m = axis_value(spec.m0, spec.m1, i, nm);
      row.l = axis_value(spec.l0, spec.l1, j, nl);
      const double disc = 4.0 * row.m - row.l * row.l;
      row.kappa_g = disc > 0.0 ? std::sqrt(disc) : 0.0;
      const HopfInvariants inv = hopf_invariants(row.m, row.l, row.kappa_g);
      row.mean_curvature = inv.mean_curvature;
      row.norm_a_sq = inv.norm_a_sq;
      row.radius = inv.extrinsic_radius;
      const bool circle = disc > 0.0;
      row.surface = circle ? "circle" : "line";
      SurfacePatch patch = circle ? hopf_circle_cylinder(row.m, row.l, row.kappa_g) : hopf_line_cylinder(row.m, row.l);
      Verdict v = verdict(patch, config.grid, vo);
      row.verdict = to_string(v.classification);
      row.max_residual = std::max(v.max_normal_residual, v.max_tangential_residual);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows, const SweepSpec& spec, const SuiteConfig& config) {
  nlohmann::json out_rows = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    out_rows.push_back({{"m", r.m},
                        {"l", r.l},
                        {"kappa_g", r.kappa_g},
                        {"H", r.mean_curvature},
                        {"normA2", r.norm_a_sq},
                        {"R", r.radius ? nlohmann::json(*r.radius) : nlohmann::json(nullptr)},
                        {"surface", r.surface},
                        {"verdict", r.verdict},
                        {"max_residual", r.max_residual}});
  }
  nlohmann::json cfg = to_json(config);
  cfg["m_range"] = {spec.m0, spec.m1};
  cfg["l_range"] = {spec.l0, spec.l1};
  cfg["steps"] = spec.steps;
  return {{"sweep", "hopf-cylinders"}, {"config", cfg}, {"rows", out_rows}};
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "m,l,kappa_g,H,normA2,R,surface,verdict,max_residual\n";
  for (const SweepRow& r : rows) {
    out += format_number(r.m) + ',' + format_number(r.l) + ',' + format_number(r.kappa_g) + ',' +
           format_number(r.mean_curvature) + ',' + format_number(r.norm_a_sq) + ',' +
           (r.radius ? format_number(*r.radius) : std::string()) + ',' + r.surface + ',' + r.verdict + ',' +
           format_number(r.max_residual) + '\n';
  }
  return out;
}

}  // namespace biharm::verify
