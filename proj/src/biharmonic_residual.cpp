#include "biharm/biharmonic_residual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace biharm {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::minimal: return "minimal";
    case Classification::proper_biharmonic: return "proper_biharmonic";
    case Classification::not_biharmonic: return "not_biharmonic";
  }
  return "?";
}

namespace {

double i_norm(const Mat2& I, const Vec2& t) {
  double q = I[0][0] * t[0] * t[0] + 2.0 * I[0][1] * t[0] * t[1] + I[1][1] * t[1] * t[1];
  return std::sqrt(std::max(q, 0.0));
}

/// Parameter components of (Ric(xi))^T, the tangential part of the Ricci
/// operator applied to the normal.
Vec2 tangential_ricci(const SurfacePatch& patch, const ParamPoint& q, const CurvatureData& curv, const Vec3& xi,
                      const Mat2& I) {
  ImmersionJet jet = immersion_jet(patch, q);
  Vec2 covariant{curv.ricci_form(xi, jet.r_u), curv.ricci_form(xi, jet.r_v)};
  return mat_vec(inverse2(I), covariant);
}

void certify_cmc(const SurfacePatch& patch, const ResidualOptions& options) {
  ScalarField h = mean_curvature_field(patch);
  const ParamDomain& d = patch.domain();
  // keep the stencil inside the domain
  const double inset = 2.0 * options.differences.step;
  ParamDomain inner_domain{d.u0 + inset, d.u1 - inset, d.v0 + inset, d.v1 - inset};
  if (!(inner_domain.u0 < inner_domain.u1) || !(inner_domain.v0 < inner_domain.v1))
    throw OutOfDomain("patch domain too small for the CMC certification stencil");
  for (const ParamPoint& p : grid_points(inner_domain, {options.cmc_grid_u, options.cmc_grid_v})) {
    Vec2 grad = gradient_components(patch, h, p, options.differences);
    double norm = i_norm(first_fundamental_form(patch, p), grad);
    if (!(norm <= options.cmc_tol))
      throw PreconditionFailed("patch is not CMC: |grad H| = " + std::to_string(norm) + " exceeds " +
                               std::to_string(options.cmc_tol));
  }
}

}  // namespace

BiharmonicResidual residual_full(const SurfacePatch& patch, const ParamPoint& q, const ResidualOptions& options) {
  const ShapeReport rep = shape_report(patch, q);
  const ScalarField h_field = mean_curvature_field(patch);
  const double lap = laplace_beltrami(patch, h_field, q, options.differences);
  const Vec2 grad = gradient_components(patch, h_field, q, options.differences);

  const CurvatureData curv = curvature_at(patch.model(), rep.point);
  const Vec3& xi = rep.normal.components;
  const double h = rep.mean_curvature;

  BiharmonicResidual out;
  out.at = q;
  out.mean_curvature = h;
  out.normal_residual = lap - h * rep.norm_a_sq + h * curv.ricci_form(xi, xi);

  const Vec2 ric_t = tangential_ricci(patch, q, curv, xi, rep.first_form);
  const Vec2 a_grad = mat_vec(rep.shape_operator, grad);
  // 2 A(grad H) + grad(H^2) - 2 H (Ric xi)^T, with grad(H^2) = 2 H grad H
  Vec2 t{};
  for (int a = 0; a < 2; ++a) t[a] = 2.0 * a_grad[a] + 2.0 * h * grad[a] - 2.0 * h * ric_t[a];
  out.tangential_residual = i_norm(rep.first_form, t);
  if (patch.model().kind() == ModelKind::bcv) out.chn_triple = chn_residual(patch.model(), patch, q);
  if (patch.model().kind() == ModelKind::sol) out.csl_triple = csl_residual(patch.model(), patch, q);
  return out;
}

BiharmonicResidual residual_cmc(const SurfacePatch& patch, const ParamPoint& q, const ResidualOptions& options) {
  certify_cmc(patch, options);
  const ShapeReport rep = shape_report(patch, q);
  const CurvatureData curv = curvature_at(patch.model(), rep.point);
  const Vec3& xi = rep.normal.components;
  const double h = rep.mean_curvature;

  BiharmonicResidual out;
  out.at = q;
  out.mean_curvature = h;
  out.normal_residual = h * (curv.ricci_form(xi, xi) - rep.norm_a_sq);
  const Vec2 ric_t = tangential_ricci(patch, q, curv, xi, rep.first_form);
  out.tangential_residual = i_norm(rep.first_form, {2.0 * h * ric_t[0], 2.0 * h * ric_t[1]});
  return out;
}

namespace {

struct AdaptedCoefficients {
  double norm_a_sq;
  double c3;
  double a3;
  double b3;
};

AdaptedCoefficients adapted_coefficients(const MetricModel& model, ModelKind expected, const SurfacePatch& patch,
                                         const ParamPoint& q) {
  if (model.kind() != expected)
    throw InvalidArgument("reduced system requires a " + to_string(expected) + " ambient, got " + model.describe());
  const MetricModel& ambient = patch.model();
  if (ambient.kind() != model.kind() || ambient.m() != model.m() || ambient.l() != model.l())
    throw InvalidArgument("patch ambient " + ambient.describe() + " does not match " + model.describe());
  const AdaptedFrame frame = adapted_frame(patch, q);
  const ShapeReport rep = shape_report(patch, q);
  return {rep.norm_a_sq, frame_coefficients(model, frame.normal)[2], frame_coefficients(model, frame.e1)[2],
          frame_coefficients(model, frame.e2)[2]};
}

}  // namespace

std::array<double, 3> chn_residual(const MetricModel& model, const SurfacePatch& patch, const ParamPoint& q) {
  const AdaptedCoefficients k = adapted_coefficients(model, ModelKind::bcv, patch, q);
  const double m = model.m();
  const double l = model.l();
  const double gap = l * l - 4.0 * m;
  return {k.norm_a_sq - (4.0 * m - 0.5 * l * l) - gap * k.c3 * k.c3, gap * k.c3 * k.a3, gap * k.c3 * k.b3};
}

std::array<double, 3> csl_residual(const MetricModel& model, const SurfacePatch& patch, const ParamPoint& q) {
  const AdaptedCoefficients k = adapted_coefficients(model, ModelKind::sol, patch, q);
  return {k.norm_a_sq + 2.0 * k.c3 * k.c3, k.c3 * k.a3, k.c3 * k.b3};
}

std::vector<ParamPoint> grid_points(const ParamDomain& domain, const GridSpec& grid) {
  if (grid.nu < 1 || grid.nv < 1) throw InvalidArgument("grid must have at least one point per direction");
  std::vector<ParamPoint> pts;
  pts.reserve(static_cast<std::size_t>(grid.nu) * static_cast<std::size_t>(grid.nv));
  const double du = (domain.u1 - domain.u0) / grid.nu;
  const double dv = (domain.v1 - domain.v0) / grid.nv;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) pts.push_back({domain.u0 + (i + 0.5) * du, domain.v0 + (j + 0.5) * dv});
  return pts;
}

namespace {

double finite_or_inf(double x) { return std::isfinite(x) ? x : std::numeric_limits<double>::infinity(); }

}  // namespace

Verdict verdict(const SurfacePatch& patch, const GridSpec& grid, const VerdictOptions& options) {
  Verdict out;
  out.min_abs_h = std::numeric_limits<double>::infinity();
  for (const ParamPoint& p : grid_points(patch.domain(), grid)) {
    BiharmonicResidual r = residual_full(patch, p, options.residual);
    const double abs_h = finite_or_inf(std::abs(r.mean_curvature));
    out.max_abs_h = std::max(out.max_abs_h, abs_h);
    out.min_abs_h = std::min(out.min_abs_h, abs_h);
    out.max_normal_residual = std::max(out.max_normal_residual, finite_or_inf(std::abs(r.normal_residual)));
    out.max_tangential_residual = std::max(out.max_tangential_residual, finite_or_inf(r.tangential_residual));
    ++out.points;
  }
  const double max_residual = std::max(out.max_normal_residual, out.max_tangential_residual);
  if (out.max_abs_h <= options.tol) {
    out.classification = Classification::minimal;
    out.margin = options.tol - out.max_abs_h;
  } else if (max_residual <= options.tol && out.min_abs_h > options.margin_floor) {
    out.classification = Classification::proper_biharmonic;
    out.margin = std::min(options.tol - max_residual, out.min_abs_h - options.margin_floor);
  } else {
    out.classification = Classification::not_biharmonic;
    out.margin = std::max(max_residual - options.tol, options.margin_floor - out.min_abs_h);
  }
  return out;
}

}  // namespace biharm
