#include "biharm/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>

#include "biharm/hopf_cylinders.hpp"
#include "biharm/verify/geometry_tables.hpp"
#include "biharm/verify/sampling.hpp"
#include "biharm/verify/surfaces.hpp"

namespace biharm::verify {

namespace {

using Checks = std::vector<CheckRecord>;
using Setting = std::pair<double, double>;

constexpr double table_tol = 1e-8;
constexpr double pi = std::numbers::pi;

std::string tag(double m, double l) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "m=%g,l=%g", m, l);
  return buf;
}

std::vector<Setting> settings_or(const SuiteConfig& c, std::vector<Setting> defaults) {
  if (c.m || c.l) return {{c.m.value_or(1.0), c.l.value_or(0.0)}};
  return defaults;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(n == 1 ? 0.5 * (a + b) : a + (b - a) * i / (n - 1));
  return out;
}

/// Half-width of a square in the base plane safely inside the domain.
double base_half_width(double m) { return m < 0.0 ? std::min(0.8, std::sqrt(0.8 / (-2.0 * m))) : 0.8; }

double max_abs(const std::array<double, 3>& t) { return std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])}); }

double vec_dist(const Vec3& a, const Vec3& b) { return euclidean_norm(a - b); }

struct Sampled {
  std::string name;
  SurfacePatch patch;
};

// ---------------------------------------------------------------------------
// geometry-tables

void table_checks(const SuiteConfig& config, Checks& out) {
  const GeometryTables& tables = embedded_geometry_tables();
  auto scan = [](const MetricModel& model, const ModelTables& t, double half) {
    TableComparison worst;
    for (double x : linspace(-half, half, 5))
      for (double y : linspace(-half, half, 5))
        for (double z : linspace(-1.0, 1.0, 5)) {
          TableComparison c = compare_with_tables(model, t, {x, y, z});
          worst.max_lie = std::max(worst.max_lie, c.max_lie);
          worst.max_connection = std::max(worst.max_connection, c.max_connection);
          worst.max_curvature_operator = std::max(worst.max_curvature_operator, c.max_curvature_operator);
          worst.max_riemann = std::max(worst.max_riemann, c.max_riemann);
          worst.max_ricci = std::max(worst.max_ricci, c.max_ricci);
          worst.entries += c.entries;
        }
    return worst;
  };
  auto emit = [&](const std::string& prefix, const TableComparison& w, bool with_operator) {
    out.push_back(check_at_most(prefix + ".lie", "frame brackets vs table, 5x5x5 grid", w.max_lie, table_tol));
    out.push_back(
        check_at_most(prefix + ".connection", "nabla_{E_i} E_j vs table, 5x5x5 grid", w.max_connection, table_tol));
    out.push_back(check_at_most(prefix + ".riemann", "R_ijkl vs table (symmetry-completed), 5x5x5 grid",
                                w.max_riemann, table_tol));
    out.push_back(check_at_most(prefix + ".ricci", "Ric(E_i, E_j) vs table, 5x5x5 grid", w.max_ricci, table_tol));
    if (with_operator)
      out.push_back(check_at_most(prefix + ".curvature_operator", "R(E_i, E_j)E_k vs table, 5x5x5 grid",
                                  w.max_curvature_operator, table_tol));
  };

  const std::vector<Setting> six = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}, {0.25, 0.0}, {-0.125, 0.0}};
  for (auto [m, l] : settings_or(config, six)) {
    MetricModel model = MetricModel::bcv(m, l);
    emit("tables.bcv." + tag(m, l), scan(model, tables.bcv, base_half_width(m)), false);
  }
  emit("tables.sol", scan(MetricModel::sol(), tables.sol, 1.0), true);
}

struct ModelBox {
  MetricModel model;
  Vec3 lo;
  Vec3 hi;
};

std::vector<ModelBox> property_models(const SuiteConfig& config) {
  std::vector<ModelBox> out;
  const std::vector<Setting> six = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}, {0.25, 0.0}, {-0.125, 0.0}};
  for (auto [m, l] : settings_or(config, six)) {
    double h = base_half_width(m);
    out.push_back({MetricModel::bcv(m, l), {-h, -h, -1.0}, {h, h, 1.0}});
  }
  out.push_back({MetricModel::sol(), {-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}});
  out.push_back({MetricModel::space_form(1.0), {-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}});
  out.push_back({MetricModel::space_form(-1.0), {-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}});
  return out;
}

/// Polynomial vector field with components a + b.q + c.q^2 (componentwise square).
struct PolyField {
  std::array<std::array<double, 7>, 3> coef{};

  template <typename T>
  Vec3T<T> operator()(const Vec3T<T>& q) const {
    Vec3T<T> out{};
    for (int k = 0; k < 3; ++k) {
      T v = T(coef[k][0]);
      for (int i = 0; i < 3; ++i) v = v + coef[k][1 + i] * q[i] + coef[k][4 + i] * q[i] * q[i];
      out[k] = v;
    }
    return out;
  }
};

PolyField random_field(QuasiRandomSampler& rng) {
  PolyField f;
  for (auto& row : f.coef)
    for (double& c : row) c = rng.uniform(-1.0, 1.0);
  return f;
}

Vec3 random_vector(QuasiRandomSampler& rng) { return {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}; }

void chart_property_checks(const SuiteConfig& config, Checks& out) {
  double ortho = 0.0, torsion = 0.0, compat = 0.0, antisym = 0.0, pair = 0.0, bianchi = 0.0, ric_op = 0.0;
  double einstein = 0.0;
  int models = 0;
  for (const ModelBox& mb : property_models(config)) {
    const MetricModel& model = mb.model;
    ++models;
    QuasiRandomSampler rng(config.seed);
    for (int n = 0; n < 100; ++n) {
      ChartPoint p = rng.next_in(model, mb.lo, mb.hi);
      auto frame = orthonormal_frame_at(model, p);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          ortho = std::max(ortho, std::abs(inner_at(model, frame[i], frame[j]) - (i == j ? 1.0 : 0.0)));
    }
    for (int n = 0; n < 20; ++n) {
      ChartPoint p = rng.next_in(model, mb.lo, mb.hi);
      auto frame = orthonormal_frame_at(model, p);
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
          Vec3 a = covariant_derivative_at(model, p, frame_field(model, j), frame[i - 1]).components;
          Vec3 b = covariant_derivative_at(model, p, frame_field(model, i), frame[j - 1]).components;
          Vec3 br = lie_bracket_frame_at(model, p, i, j).components;
          torsion = std::max(torsion, norm_at(model, {p, a - b - br}));
        }

      // d/dt g(Y, Z)(p + tX) against g(nabla_X Y, Z) + g(Y, nabla_X Z)
      PolyField fy = random_field(rng), fz = random_field(rng);
      TangentVector x{p, random_vector(rng)};
      Vec3T<D1> q{D1(p.x, x.components[0]), D1(p.y, x.components[1]), D1(p.z, x.components[2])};
      Mat3T<D1> g = model.metric(q);
      Vec3T<D1> yq = fy(q), zq = fz(q);
      D1 gyz(0.0);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) gyz = gyz + g[a][b] * yq[a] * zq[b];
      TangentVector y0{p, fy(p.coords())}, z0{p, fz(p.coords())};
      double rhs = inner_at(model, covariant_derivative_at(model, p, fy, x), z0) +
                   inner_at(model, y0, covariant_derivative_at(model, p, fz, x));
      compat = std::max(compat, std::abs(gyz.eps - rhs));

      const CurvatureData curv = curvature_at(model, p);
      for (int t = 0; t < 3; ++t) {
        Vec3 X = random_vector(rng), Y = random_vector(rng), Z = random_vector(rng), W = random_vector(rng);
        double r = curv.riemann(X, Y, Z, W);
        antisym = std::max({antisym, std::abs(r + curv.riemann(Y, X, Z, W)), std::abs(r + curv.riemann(X, Y, W, Z))});
        pair = std::max(pair, std::abs(r - curv.riemann(Z, W, X, Y)));
        Vec3 cyc = curv.curvature_operator(X, Y, Z) + curv.curvature_operator(Y, Z, X) + curv.curvature_operator(Z, X, Y);
        bianchi = std::max(bianchi, norm_at(model, {p, cyc}));
        ric_op = std::max(ric_op, std::abs(inner(curv.g, curv.ricci_operator(Z), W) - curv.ricci_form(Z, W)));
        if (model.kind() == ModelKind::space_form)
          einstein = std::max(einstein, std::abs(curv.ricci_form(X, X) - 2.0 * model.c() * inner(curv.g, X, X)));
      }
    }
  }
  const std::string over = " over " + std::to_string(models) + " models";
  out.push_back(check_at_most("property.frame_orthonormality", "max |g(E_i,E_j) - delta_ij|, 100 points" + over, ortho,
                              1e-10));
  out.push_back(check_at_most("property.torsion_free", "max |nabla_Ei Ej - nabla_Ej Ei - [Ei,Ej]|" + over, torsion, 1e-7));
  out.push_back(check_at_most("property.metric_compatibility",
                              "d/dt g(Y,Z) vs g(nabla Y,Z) + g(Y,nabla Z), polynomial fields" + over, compat, 1e-7));
  out.push_back(check_at_most("property.riemann_antisymmetry", "R(X,Y,Z,W) + R(Y,X,Z,W), R(X,Y,Z,W) + R(X,Y,W,Z)" + over,
                              antisym, 1e-8));
  out.push_back(check_at_most("property.riemann_pair_symmetry", "R(X,Y,Z,W) - R(Z,W,X,Y)" + over, pair, 1e-8));
  out.push_back(check_at_most("property.first_bianchi", "|R(X,Y)Z + R(Y,Z)X + R(Z,X)Y|" + over, bianchi, 1e-8));
  out.push_back(check_at_most("property.ricci_operator", "g(RicOp Z, W) - Ric(Z, W)" + over, ric_op, 1e-10));
  out.push_back(check_at_most("property.space_form_einstein", "Ric(X,X) - 2c g(X,X) in space-form charts", einstein, 1e-8));
}

// ---------------------------------------------------------------------------
// hopf-circle

void hopf_checks(const SuiteConfig& config, Checks& out) {
  const VerdictOptions vo = verdict_options(config);
  const double tol = config.tol;
  const std::vector<Setting> defaults = {{1.0, 0.0}, {1.0, 1.0}, {1.0, std::sqrt(2.0)}, {0.25, 0.0}};
  double cmc_paths = 0.0, fiber_drift = 0.0, normal_dev = 0.0;

  for (auto [m, l] : settings_or(config, defaults)) {
    const std::string t = tag(m, l);
    const double disc = 4.0 * m - l * l;
    if (!(disc > 0.0)) {
      Verdict v = verdict(hopf_line_cylinder(m, l), config.grid, vo);
      out.push_back(check_condition("hopf.circle." + t + ".no_circle", "4m - l^2 <= 0: only the minimal line cylinder",
                                    v.classification == Classification::minimal, v.max_abs_h, tol, v.margin));
      continue;
    }
    const double kappa = std::sqrt(disc);
    const double rho = circle_for_kg(m, kappa);
    const PlaneCurve curve = coordinate_circle(m, rho);
    const SurfacePatch patch = lift_cylinder(m, l, curve);
    const MetricModel& model = patch.model();

    Verdict v = verdict(patch, config.grid, vo);
    out.push_back(check_at_most("hopf.circle." + t + ".residual", "max full residual over grid",
                                std::max(v.max_normal_residual, v.max_tangential_residual), tol));
    out.push_back(check_condition("hopf.circle." + t + ".verdict", "proper_biharmonic; got " + to_string(v.classification),
                                  v.classification == Classification::proper_biharmonic,
                                  std::max(v.max_normal_residual, v.max_tangential_residual), tol, v.margin));

    double dh = 0.0, da = 0.0, chn = 0.0, grad = 0.0;
    const ScalarField hf = mean_curvature_field(patch);
    for (const ParamPoint& q : grid_points(patch.domain(), config.grid)) {
      ShapeReport rep = shape_report(patch, q);
      dh = std::max(dh, std::abs(std::abs(rep.mean_curvature) - 0.5 * kappa));
      da = std::max(da, std::abs(rep.norm_a_sq - (kappa * kappa + 0.5 * l * l)));
      chn = std::max(chn, max_abs(chn_residual(model, patch, q)));
      grad = std::max(grad, norm_at(model, intrinsic_gradient(patch, hf, q, vo.residual.differences)));

      BiharmonicResidual rc = residual_cmc(patch, q, vo.residual);
      const TangentVector& xi = rep.normal;
      double direct = rep.mean_curvature * (ricci_at(model, rep.point, xi, xi) - rep.norm_a_sq);
      cmc_paths = std::max(cmc_paths, std::abs(rc.normal_residual - direct));

      // xi = +-((y'/F) E1 - (x'/F) E2)
      Vec2T<D1> c = curve(D1(q.u, 1.0));
      double f = 1.0 + m * (c[0].re * c[0].re + c[1].re * c[1].re);
      auto frame = orthonormal_frame_at(model, rep.point);
      Vec3 expect = (c[1].eps / f) * frame[0].components - (c[0].eps / f) * frame[1].components;
      normal_dev = std::max(normal_dev, std::min(vec_dist(xi.components, expect), vec_dist(xi.components, -1.0 * expect)));

      // shape data along the fiber
      for (double tt : {-0.9, -0.4, 0.3, 0.8}) {
        ShapeReport other = shape_report(patch, {q.u, tt});
        double d = std::abs(other.mean_curvature - rep.mean_curvature) + std::abs(other.norm_a_sq - rep.norm_a_sq);
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) d += std::abs(other.second_form[a][b] - rep.second_form[a][b]);
        fiber_drift = std::max(fiber_drift, d);
      }
    }
    out.push_back(check_at_most("hopf.circle." + t + ".mean_curvature", "||H| - kappa_g/2| over grid", dh, 1e-6));
    out.push_back(check_at_most("hopf.circle." + t + ".norm_a_sq", "||A|^2 - (kappa_g^2 + l^2/2)| over grid", da, 1e-6));
    out.push_back(check_at_most("hopf.circle." + t + ".chn", "max |BCV reduced-system entry| over grid", chn, tol));
    out.push_back(check_at_most("hopf.circle." + t + ".grad_h", "|grad H| over grid", grad, 1e-6));

    double dtau = 0.0, dk = 0.0, dr = 0.0;
    const double r_closed = 1.0 / std::sqrt(8.0 * m - l * l);
    for (double s : linspace(curve.s0(), curve.s1(), 16)) {
      dtau = std::max(dtau, std::abs(fiber_torsion(m, l, curve, s) + 0.5 * l));
      double k = base_geodesic_curvature(m, curve, s);
      dk = std::max(dk, std::abs(k - kappa));
      dr = std::max(dr, std::abs(1.0 / std::sqrt(k * k + 4.0 * m) - r_closed));
    }
    out.push_back(check_at_most("hopf.circle." + t + ".fiber_torsion", "|tau_g + l/2| at 16 points", dtau, 1e-9));
    out.push_back(check_at_most("hopf.circle." + t + ".kappa_g", "numeric kappa_g of the built circle vs target", dk, 1e-9));
    out.push_back(check_at_most("hopf.circle." + t + ".radius", "1/sqrt(kappa_g^2 + 4m) vs 1/sqrt(8m - l^2)", dr, 1e-9));

    // 5% radius perturbation
    const PlaneCurve wide = coordinate_circle(m, 1.05 * rho);
    const SurfacePatch perturbed = lift_cylinder(m, l, wide);
    double min_chn = std::numeric_limits<double>::infinity();
    for (const ParamPoint& q : grid_points(perturbed.domain(), config.grid))
      min_chn = std::min(min_chn, std::abs(chn_residual(model, perturbed, q)[0]));
    out.push_back(check_at_least("hopf.circle." + t + ".perturbed_chn", "min |first BCV reduced-system entry| at radius 1.05 rho",
                                 min_chn, 1e-2));
    Verdict pv = verdict(perturbed, config.grid, vo);
    out.push_back(check_condition("hopf.circle." + t + ".perturbed_verdict",
                                  "not_biharmonic at radius 1.05 rho; got " + to_string(pv.classification),
                                  pv.classification == Classification::not_biharmonic,
                                  std::max(pv.max_normal_residual, pv.max_tangential_residual), tol, pv.margin));

    // curve-level system
    const CurvatureProfile exact = CurvatureProfile::constant_from_square(disc);
    const CurvatureProfile measured =
        CurvatureProfile::sampled([m, curve](double s) { return base_geodesic_curvature(m, curve, s); }, 1e-2);
    double ode_exact = 0.0, ode_num = 0.0;
    for (double s : linspace(curve.s0() + 0.05, curve.s1() - 0.05, 9)) {
      ode_exact = std::max(ode_exact, max_abs(curve_ode_residual(exact, m, l, s)));
      ode_num = std::max(ode_num, max_abs(curve_ode_residual(measured, m, l, s)));
    }
    out.push_back(check_at_most("ode." + t + ".closed_form", "kappa^2 = 4m - l^2 carried exactly: triple == 0", ode_exact,
                                0.0));
    out.push_back(check_at_most("ode." + t + ".numeric", "triple from the measured kappa_g of the built circle", ode_num,
                                1e-9));
  }

  out.push_back(check_at_most("property.cmc_paths", "residual_cmc vs H(Ric(xi,xi) - |A|^2) from shape_report/ricci_at",
                              cmc_paths, 1e-10));
  out.push_back(check_at_most("property.hopf_normal", "xi vs +-((y'/F)E1 - (x'/F)E2)", normal_dev, 1e-10));
  out.push_back(check_at_most("property.fiber_invariance", "H, |A|^2, h drift along fibers", fiber_drift, 1e-9));

  {
    auto linear = CurvatureProfile::analytic([](const auto& s) { return s; });
    auto r = curve_ode_residual(linear, 1.0, 0.0, 1.0);
    double d = std::max({std::abs(r[0] - 3.0), std::abs(r[1] - 3.0), std::abs(r[2])});
    out.push_back(check_at_most("ode.linear_profile", "kappa(s) = s at s = 1, (m,l) = (1,0): (3,3,0)", d, 0.0));
    auto zero = curve_ode_residual(CurvatureProfile::constant_from_square(0.0), 1.0, 0.0, 0.3);
    out.push_back(check_at_most("ode.zero_profile", "kappa = 0: (0,0,0)", max_abs(zero), 0.0));
  }

  {
    double worst = 0.0;
    QuasiRandomSampler rng(config.seed);
    for (double m : {1.0, 0.25, -0.125, 0.0}) {
      const double h = base_half_width(m);
      for (int n = 0; n < 20; ++n) {
        auto u = rng.next_unit();
        double x = -h + 2.0 * h * u[0], y = -h + 2.0 * h * u[1];
        worst = std::max(worst, std::abs(base_gaussian_curvature(m, x, y) - 4.0 * m));
      }
    }
    out.push_back(check_at_most("property.base_curvature", "Gaussian curvature of (R^2, h) vs 4m", worst, 1e-8));
  }

  {
    struct Case {
      double m, l;
      double kappa;  // < 0: line cylinder
      bool proper;
    };
    const std::vector<Case> window = {
        {1.0, 0.0, 2.0, true},   {1.0, 0.0, 2.4, false},  {1.0, 0.0, 1.6, false}, {0.5, 1.0, 1.0, true},
        {0.5, 1.0, 0.5, false},  {1.0, 2.0, -1.0, false}, {1.0, 2.0, 1.0, false}, {0.25, 1.0, -1.0, false},
        {1.0, 3.0, -1.0, false}, {1.0, 3.0, 1.0, false},  {0.0, 0.0, -1.0, false}, {-0.25, 0.0, -1.0, false}};
    int mismatches = 0;
    std::string bad;
    for (const Case& c : window) {
      const bool line = c.kappa < 0.0;
      SurfacePatch p = line ? hopf_line_cylinder(c.m, c.l) : hopf_circle_cylinder(c.m, c.l, c.kappa);
      Classification got = verdict(p, config.grid, vo).classification;
      bool ok = (got == Classification::proper_biharmonic) == c.proper;
      if (line || 4.0 * c.m - c.l * c.l <= 0.0) ok = ok && (line ? got == Classification::minimal : true);
      if (!ok) {
        ++mismatches;
        bad += " " + tag(c.m, c.l) + (line ? ",line" : ",kappa=" + format_number(c.kappa)) + "->" + to_string(got);
      }
    }
    out.push_back(check_at_most("property.properness_window",
                                "proper iff 4m - l^2 > 0 and kappa_g = sqrt(4m - l^2); " + std::to_string(window.size()) +
                                    " cases" + (bad.empty() ? "" : ";" + bad),
                                mismatches, 0.0));
  }
}

// ---------------------------------------------------------------------------
// sphere-in-s3

double laplace_order(const SurfacePatch& patch, const ScalarField& f, const std::function<double(double, double)>& exact,
                     const ParamPoint& q, double h) {
  DifferenceOptions coarse{h, false}, fine{0.5 * h, false};
  double e1 = std::abs(laplace_beltrami(patch, f, q, coarse) - exact(q.u, q.v));
  double e2 = std::abs(laplace_beltrami(patch, f, q, fine) - exact(q.u, q.v));
  return std::log2(e1 / e2);
}

std::vector<Sampled> calculus_test_surfaces() {
  return {{"sphere_quarter_pi", geodesic_sphere(1.0, 0.25 * pi)},
          {"sphere_third_pi", geodesic_sphere(1.0, pi / 3.0)},
          {"hyperbolic_offcentre_sphere", chart_sphere(MetricModel::space_form(-1.0), {0.1, 0.2, 0.0}, 0.5)},
          {"hopf_m=1,l=1", hopf_circle_cylinder(1.0, 1.0, std::sqrt(3.0))},
          {"sol_cylinder", sol_vertical_cylinder(1.0)},
          {"sol_adapted_cylinder", sol_adapted_cylinder(1.0)},
          {"sol_plane_z", coordinate_plane(MetricModel::sol(), 'z', 0.3)},
          {"nil_plane_x", coordinate_plane(MetricModel::bcv(0.0, 1.0), 'x', 0.2)}};
}

void sphere_checks(const SuiteConfig& config, Checks& out) {
  const VerdictOptions vo = verdict_options(config);
  const double tol = config.tol;
  {
    const SurfacePatch s = geodesic_sphere(1.0, 0.25 * pi);
    Verdict v = verdict(s, config.grid, vo);
    out.push_back(check_at_most("sphere.quarter_pi.residual", "max full residual, intrinsic radius pi/4",
                                std::max(v.max_normal_residual, v.max_tangential_residual), tol));
    out.push_back(check_condition("sphere.quarter_pi.verdict", "proper_biharmonic; got " + to_string(v.classification),
                                  v.classification == Classification::proper_biharmonic,
                                  std::max(v.max_normal_residual, v.max_tangential_residual), tol, v.margin));
    double dh = 0.0, umb = 0.0, da = 0.0, cmc = 0.0;
    for (const ParamPoint& q : grid_points(s.domain(), config.grid)) {
      ShapeReport rep = shape_report(s, q);
      dh = std::max(dh, std::abs(std::abs(rep.mean_curvature) - 1.0));
      umb = std::max(umb, rep.umbilicity_deficit);
      da = std::max(da, std::abs(rep.norm_a_sq - 2.0));
      BiharmonicResidual r = residual_cmc(s, q, vo.residual);
      cmc = std::max({cmc, std::abs(r.normal_residual), r.tangential_residual});
    }
    out.push_back(check_at_most("sphere.quarter_pi.mean_curvature", "||H| - 1| over grid", dh, 1e-6));
    out.push_back(check_at_most("sphere.quarter_pi.umbilicity", "delta_umb over grid", umb, 1e-6));
    out.push_back(check_at_most("sphere.quarter_pi.norm_a_sq", "||A|^2 - 2| over grid", da, 1e-6));
    out.push_back(check_at_most("sphere.quarter_pi.cmc_residual", "reduced CMC residual over grid", cmc, tol));
  }
  for (auto [name, rho] : {std::pair{"third_pi", pi / 3.0}, std::pair{"sixth_pi", pi / 6.0}}) {
    const SurfacePatch s = geodesic_sphere(1.0, rho);
    const double cot = 1.0 / std::tan(rho);
    const double oracle = cot * (2.0 - 2.0 * cot * cot);
    double floor = std::numeric_limits<double>::infinity(), dev = 0.0, dh = 0.0;
    for (const ParamPoint& q : grid_points(s.domain(), config.grid)) {
      BiharmonicResidual r = residual_full(s, q, vo.residual);
      floor = std::min(floor, std::abs(r.normal_residual));
      dev = std::max(dev, std::abs(std::abs(r.normal_residual) - std::abs(oracle)));
      dh = std::max(dh, std::abs(std::abs(r.mean_curvature) - cot));
    }
    const std::string id = std::string("sphere.") + name;
    out.push_back(check_at_least(id + ".residual_floor", "min |normal residual| over grid", floor, 0.5));
    out.push_back(check_at_most(id + ".oracle", "|residual| vs cot(rho)(2 - 2cot^2(rho)) = " + format_number(oracle),
                                dev, 1e-6));
    out.push_back(check_at_most(id + ".mean_curvature", "||H| - cot(rho)| over grid", dh, 1e-6));
    Verdict v = verdict(s, config.grid, vo);
    out.push_back(check_condition(id + ".verdict", "not_biharmonic; got " + to_string(v.classification),
                                  v.classification == Classification::not_biharmonic,
                                  std::max(v.max_normal_residual, v.max_tangential_residual), tol, v.margin));
  }

  // calculus properties on a mixed set of surfaces
  double hsym = 0.0, bound = 0.0, split = 0.0, flip = 0.0;
  for (const Sampled& t : calculus_test_surfaces()) {
    const SurfacePatch swapped = swap_parameters(t.patch);
    for (const ParamPoint& q : grid_points(t.patch.domain(), config.grid)) {
      ShapeReport rep = shape_report(t.patch, q);
      hsym = std::max(hsym, std::abs(rep.second_form[0][1] - rep.second_form[1][0]));
      const double h2 = 2.0 * rep.mean_curvature * rep.mean_curvature;
      bound = std::max(bound, h2 - rep.norm_a_sq);
      split = std::max(split, std::abs(rep.norm_a_sq - h2 - rep.umbilicity_deficit * rep.umbilicity_deficit));
      ShapeReport sw = shape_report(swapped, {q.v, q.u});
      flip = std::max({flip, vec_dist(sw.normal.components, -1.0 * rep.normal.components),
                       std::abs(sw.mean_curvature + rep.mean_curvature), std::abs(sw.norm_a_sq - rep.norm_a_sq),
                       std::abs(sw.umbilicity_deficit - rep.umbilicity_deficit)});
    }
  }
  out.push_back(check_at_most("property.h_symmetry", "|h_12 - h_21| over test surfaces", hsym, 1e-7));
  out.push_back(check_at_most("property.norm_bound", "2H^2 - |A|^2 (must be <= 0)", bound, 1e-12));
  out.push_back(check_at_most("property.umbilic_split", "||A|^2 - 2H^2 - delta_umb^2|", split, 1e-10));
  out.push_back(check_at_most("property.normal_invariance", "(u,v) -> (v,u): xi, H flip; |A|^2, delta_umb kept", flip,
                              1e-10));

  {
    // f = u^2 cos^2 v = x^2 on the polar-coordinate plane: Laplacian 2
    const SurfacePatch polar = SurfacePatch::analytic(MetricModel::bcv(0.0, 0.0), {0.5, 1.5, 0.0, 2.0 * pi},
                                                      [](const auto& u, const auto& v) {
                                                        using std::cos;
                                                        using std::sin;
                                                        using T = std::decay_t<decltype(u)>;
                                                        return Vec3T<T>{u * cos(v), u * sin(v), T(0.0)};
                                                      });
    ScalarField fx = [](double u, double v) { return u * u * std::cos(v) * std::cos(v); };
    // f = z = cos(theta) on the unit sphere: Laplacian -2z
    const SurfacePatch sphere = chart_sphere(MetricModel::bcv(0.0, 0.0), {0.0, 0.0, 0.0}, 1.0);
    ScalarField fz = [](double, double theta) { return std::cos(theta); };
    double order = std::numeric_limits<double>::infinity();
    for (const ParamPoint& q : {ParamPoint{0.9, 0.7}, ParamPoint{1.2, 2.0}, ParamPoint{0.7, 4.1}})
      order = std::min(order, laplace_order(polar, fx, [](double, double) { return 2.0; }, q, 0.04));
    for (const ParamPoint& q : {ParamPoint{0.5, 0.8}, ParamPoint{2.0, 1.3}, ParamPoint{4.0, 2.2}})
      order = std::min(order, laplace_order(sphere, fz, [](double, double t) { return -2.0 * std::cos(t); }, q, 0.04));
    out.push_back(check_at_least("property.laplace_order", "observed order under step halving (0.04 -> 0.02)", order, 1.9));
  }
}

// ---------------------------------------------------------------------------
// sol-cmc

void sol_checks(const SuiteConfig& config, Checks& out) {
  const VerdictOptions vo = verdict_options(config);
  const MetricModel sol = MetricModel::sol();
  std::vector<Sampled> candidates;
  for (double c : {-0.5, 0.0, 0.7}) candidates.push_back({"plane_z=" + format_number(c), coordinate_plane(sol, 'z', c)});
  for (double c : {0.0, 0.4}) candidates.push_back({"plane_x=" + format_number(c), coordinate_plane(sol, 'x', c)});
  for (double c : {0.0, -0.4}) candidates.push_back({"plane_y=" + format_number(c), coordinate_plane(sol, 'y', c)});
  for (double r : {0.5, 1.0}) candidates.push_back({"cylinder_r=" + format_number(r), sol_vertical_cylinder(r)});
  candidates.push_back({"adapted_cylinder_r=1", sol_adapted_cylinder(1.0)});

  double minimal_residual = 0.0;
  for (const Sampled& c : candidates) {
    Verdict v = verdict(c.patch, config.grid, vo);
    out.push_back(check_condition("sol." + c.name + ".not_proper", "never proper_biharmonic; got " +
                                                                       to_string(v.classification),
                                  v.classification != Classification::proper_biharmonic,
                                  std::max(v.max_normal_residual, v.max_tangential_residual), config.tol, v.margin));
    if (v.max_abs_h <= 1e-8)
      minimal_residual = std::max({minimal_residual, v.max_normal_residual, v.max_tangential_residual});
  }

  for (double c : {-0.5, 0.0, 0.7}) {
    const SurfacePatch p = coordinate_plane(sol, 'z', c);
    double hmax = 0.0, da = 0.0, csl = 0.0;
    for (const ParamPoint& q : grid_points(p.domain(), config.grid)) {
      ShapeReport rep = shape_report(p, q);
      hmax = std::max(hmax, std::abs(rep.mean_curvature));
      da = std::max(da, std::abs(rep.norm_a_sq - 2.0));
      csl = std::max(csl, std::abs(csl_residual(sol, p, q)[0] - 4.0));
    }
    const std::string id = "sol.plane_z=" + format_number(c);
    out.push_back(check_at_most(id + ".mean_curvature", "|H| over grid", hmax, 1e-8));
    out.push_back(check_at_most(id + ".norm_a_sq", "||A|^2 - 2| over grid", da, 1e-6));
    out.push_back(check_at_most(id + ".csl", "first Sol reduced-system entry vs 4", csl, 1e-6));
  }
  {
    const SurfacePatch p = coordinate_plane(sol, 'y', 0.0);
    double dev = 0.0;
    for (const ParamPoint& q : grid_points(p.domain(), config.grid)) {
      auto t = csl_residual(sol, p, q);
      dev = std::max({dev, std::abs(t[0] - shape_report(p, q).norm_a_sq), std::abs(t[1]), std::abs(t[2])});
    }
    out.push_back(check_at_most("sol.plane_y=0.csl", "Sol reduced system = (|A|^2, 0, 0) with c3 = 0", dev, 1e-10));
  }

  // harmonic => biharmonic, over every minimal patch at hand
  for (const SurfacePatch& p : {hopf_line_cylinder(1.0, 1.0), coordinate_plane(MetricModel::space_form(1.0), 'z', 0.0),
                                coordinate_plane(MetricModel::bcv(0.0, 0.0), 'z', 0.3)}) {
    Verdict v = verdict(p, config.grid, vo);
    if (v.max_abs_h <= 1e-8)
      minimal_residual = std::max({minimal_residual, v.max_normal_residual, v.max_tangential_residual});
  }
  out.push_back(check_at_most("property.minimal_biharmonic", "residuals of patches with max|H| <= 1e-8",
                              minimal_residual, 1e-7));
}

// ---------------------------------------------------------------------------
// umbilical-codazzi

void umbilical_checks(const SuiteConfig& config, Checks& out) {
  const VerdictOptions vo = verdict_options(config);
  struct Umbilic {
    std::string name;
    SurfacePatch patch;
    bool space_form_sphere;
  };
  const std::vector<Umbilic> patches = {
      {"s3_sphere_quarter_pi", geodesic_sphere(1.0, 0.25 * pi), true},
      {"s3_sphere_third_pi", geodesic_sphere(1.0, pi / 3.0), true},
      {"s3_sphere_sixth_pi", geodesic_sphere(1.0, pi / 6.0), true},
      {"s3_sphere_r1", geodesic_sphere(1.0, 1.0), true},
      {"r3_sphere_r1", geodesic_sphere(0.0, 1.0), true},
      {"h3_sphere_r0.8", geodesic_sphere(-1.0, 0.8), true},
      {"s3_offcentre_sphere", chart_sphere(MetricModel::space_form(1.0), {0.2, -0.1, 0.15}, 0.6), true},
      {"h3_offcentre_sphere", chart_sphere(MetricModel::space_form(-1.0), {0.1, 0.2, 0.0}, 0.5), true},
      {"s3_great_sphere", coordinate_plane(MetricModel::space_form(1.0), 'z', 0.0), false},
      {"r3_plane", coordinate_plane(MetricModel::bcv(0.0, 0.0), 'z', 0.3), false},
      {"sol_plane_x", coordinate_plane(MetricModel::sol(), 'x', 0.2), false},
      {"sol_plane_y", coordinate_plane(MetricModel::sol(), 'y', -0.3), false}};

  int qualifying = 0;
  double codazzi_lhs = 0.0, codazzi_rhs = 0.0;
  for (const Umbilic& u : patches) {
    const ScalarField hf = mean_curvature_field(u.patch);
    const MetricModel& model = u.patch.model();
    double deficit = 0.0, grad = 0.0;
    for (const ParamPoint& q : grid_points(u.patch.domain(), config.grid)) {
      deficit = std::max(deficit, shape_report(u.patch, q).umbilicity_deficit);
      TangentVector g = intrinsic_gradient(u.patch, hf, q, vo.residual.differences);
      grad = std::max(grad, norm_at(model, g));
      if (u.space_form_sphere) {
        AdaptedFrame f = adapted_frame(u.patch, q);
        for (const TangentVector* e : {&f.e1, &f.e2}) {
          codazzi_lhs = std::max(codazzi_lhs, std::abs(inner_at(model, g, *e)));
          codazzi_rhs = std::max(codazzi_rhs, std::abs(ricci_at(model, f.normal.base, *e, f.normal)));
        }
      }
    }
    out.push_back(check_at_most("umbilical." + u.name + ".deficit", "delta_umb over grid", deficit, 1e-6));
    Verdict v = verdict(u.patch, config.grid, vo);
    if (std::max(v.max_normal_residual, v.max_tangential_residual) <= config.tol) {
      ++qualifying;
      out.push_back(check_at_most("umbilical." + u.name + ".grad_h",
                                  "biharmonic umbilical patch (" + to_string(v.classification) + "): |grad H|", grad,
                                  1e-5));
    }
  }
  out.push_back(check_at_least("umbilical.qualifying", "umbilical patches passing the full residual", qualifying, 1));
  out.push_back(check_at_most("umbilical.codazzi_lhs", "|e_i(lambda)| on space-form spheres", codazzi_lhs, 1e-6));
  out.push_back(check_at_most("umbilical.codazzi_rhs", "|Ric(e_i, xi)| on space-form spheres", codazzi_rhs, 1e-6));
}

using SuiteFn = void (*)(const SuiteConfig&, Checks&);

std::vector<SuiteFn> parts_of(std::string_view name) {
  if (name == "geometry-tables") return {table_checks, chart_property_checks};
  if (name == "hopf-circle") return {hopf_checks};
  if (name == "sphere-in-s3") return {sphere_checks};
  if (name == "sol-cmc") return {sol_checks};
  if (name == "umbilical-codazzi") return {umbilical_checks};
  if (name == "full") return {table_checks, chart_property_checks, hopf_checks, sphere_checks, sol_checks, umbilical_checks};
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"geometry-tables", "hopf-circle", "sol-cmc", "sphere-in-s3", "umbilical-codazzi", "full"};
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
  const auto parts = parts_of(name);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  report.config = to_json(config);
  for (SuiteFn fn : parts) fn(config, report.checks);
  report.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace biharm::verify
