#include "biharm/surface_calculus.hpp"

#include <cmath>
#include <sstream>

namespace biharm {

namespace {

std::string describe(const ParamPoint& q) {
  std::ostringstream os;
  os << "(" << q.u << ", " << q.v << ")";
  return os.str();
}

void require_in_domain(const SurfacePatch& patch, const ParamPoint& q) {
  if (!patch.domain().contains(q)) throw OutOfDomain("parameter " + describe(q) + " is outside the patch domain");
}

/// Unit normal from the jet, generic so that it can be differentiated.
template <typename T>
Vec3T<T> normal_from(const MetricModel& model, const Vec3T<T>& p, const Vec3T<T>& r_u, const Vec3T<T>& r_v) {
  using std::sqrt;
  Mat3T<T> g = model.metric(p);
  Mat3T<T> g_inv = inverse3(g);
  Vec3T<T> n = cross(r_u, r_v);
  Vec3T<T> xi = mat_vec(g_inv, n);
  T len2 = n[0] * xi[0] + n[1] * xi[1] + n[2] * xi[2];
  T inv = 1.0 / sqrt(len2);
  return {xi[0] * inv, xi[1] * inv, xi[2] * inv};
}

Mat2 first_form_of(const Mat3& g, const ImmersionJet& jet) {
  double guu = inner(g, jet.r_u, jet.r_u);
  double guv = inner(g, jet.r_u, jet.r_v);
  double gvv = inner(g, jet.r_v, jet.r_v);
  return {{{guu, guv}, {guv, gvv}}};
}

void require_immersed(const Mat2& first_form, const ParamPoint& q) {
  double scale = first_form[0][0] * first_form[1][1];
  double det = det2(first_form);
  if (!(scale > 0.0) || !(det > 1e-12 * scale))
    throw DegenerateImmersion("Jacobian of the immersion has rank < 2 at " + describe(q));
}

D1 lift(double value, double derivative) { return {value, derivative}; }

Vec3T<D1> lift(const Vec3& value, const Vec3& derivative) {
  return {lift(value[0], derivative[0]), lift(value[1], derivative[1]), lift(value[2], derivative[2])};
}

}  // namespace

// ---------------------------------------------------------------------------

SurfacePatch::SurfacePatch(MetricModel model, ParamDomain domain) : model_(std::move(model)), domain_(domain) {
  if (!(domain.u0 < domain.u1) || !(domain.v0 < domain.v1) || !std::isfinite(domain.u0) ||
      !std::isfinite(domain.u1) || !std::isfinite(domain.v0) || !std::isfinite(domain.v1))
    throw InvalidArgument("parameter domain must be a finite, nonempty rectangle");
}

SurfacePatch SurfacePatch::sampled(MetricModel model, ParamDomain domain, std::function<Vec3(double, double)> immersion,
                                   double jet_step) {
  if (!(jet_step > 0.0)) throw InvalidArgument("jet step must be positive");
  SurfacePatch patch(std::move(model), domain);
  patch.eval_ = std::move(immersion);
  patch.jet_step_ = jet_step;
  return patch;
}

ChartPoint SurfacePatch::point(const ParamPoint& q) const {
  require_in_domain(*this, q);
  return ChartPoint::from(eval_(q.u, q.v));
}

ImmersionJet immersion_jet(const SurfacePatch& patch, const ParamPoint& q) {
  require_in_domain(patch, q);
  ImmersionJet jet;
  if (patch.is_analytic()) {
    // inner level differentiates along the first seed, outer along the second
    auto second = [&](bool inner_u, bool outer_u) {
      D2 u{D1(q.u, inner_u ? 1.0 : 0.0), D1(outer_u ? 1.0 : 0.0, 0.0)};
      D2 v{D1(q.v, inner_u ? 0.0 : 1.0), D1(outer_u ? 0.0 : 1.0, 0.0)};
      return patch.evaluate(u, v);
    };
    auto uu = second(true, true);
    auto uv = second(true, false);
    auto vv = second(false, false);
    for (int k = 0; k < 3; ++k) {
      jet.r_u[k] = uu[k].re.eps;
      jet.r_v[k] = vv[k].re.eps;
      jet.r_uu[k] = uu[k].eps.eps;
      jet.r_uv[k] = uv[k].eps.eps;
      jet.r_vv[k] = vv[k].eps.eps;
    }
    jet.point = ChartPoint::from({uu[0].re.re, uu[1].re.re, uu[2].re.re});
  } else {
    const double h = patch.jet_step();
    const double u = q.u;
    const double v = q.v;
    if (!patch.domain().contains({u - h, v - h}) || !patch.domain().contains({u + h, v + h}))
      throw OutOfDomain("jet stencil at " + describe(q) + " leaves the patch domain");
    auto r = [&](double a, double b) { return patch.evaluate(a, b); };
    Vec3 c = r(u, v);
    Vec3 ep = r(u + h, v), em = r(u - h, v), np = r(u, v + h), nm = r(u, v - h);
    Vec3 pp = r(u + h, v + h), pm = r(u + h, v - h), mp = r(u - h, v + h), mm = r(u - h, v - h);
    for (int k = 0; k < 3; ++k) {
      jet.r_u[k] = (ep[k] - em[k]) / (2.0 * h);
      jet.r_v[k] = (np[k] - nm[k]) / (2.0 * h);
      jet.r_uu[k] = (ep[k] - 2.0 * c[k] + em[k]) / (h * h);
      jet.r_vv[k] = (np[k] - 2.0 * c[k] + nm[k]) / (h * h);
      jet.r_uv[k] = (pp[k] - pm[k] - mp[k] + mm[k]) / (4.0 * h * h);
    }
    jet.point = ChartPoint::from(c);
  }
  patch.model().require_valid(jet.point);
  require_immersed(first_form_of(patch.model().metric(jet.point.coords()), jet), q);
  return jet;
}

Mat2 first_fundamental_form(const SurfacePatch& patch, const ParamPoint& q) {
  ImmersionJet jet = immersion_jet(patch, q);
  return first_form_of(patch.model().metric(jet.point.coords()), jet);
}

TangentVector unit_normal(const SurfacePatch& patch, const ParamPoint& q) {
  ImmersionJet jet = immersion_jet(patch, q);
  return {jet.point, normal_from(patch.model(), jet.point.coords(), jet.r_u, jet.r_v)};
}

TangentVector push_forward(const SurfacePatch& patch, const ParamPoint& q, const Vec2& components) {
  ImmersionJet jet = immersion_jet(patch, q);
  return {jet.point, components[0] * jet.r_u + components[1] * jet.r_v};
}

ShapeReport shape_report(const SurfacePatch& patch, const ParamPoint& q) {
  const MetricModel& model = patch.model();
  ImmersionJet jet = immersion_jet(patch, q);
  const Vec3 p = jet.point.coords();
  const Mat3 g = model.metric(p);
  const Christoffels gamma = christoffels_at(model, jet.point);

  ShapeReport rep;
  rep.at = q;
  rep.point = jet.point;
  rep.first_form = first_form_of(g, jet);

  // xi and its parameter derivatives d_a xi, from the normal evaluated on
  // dual numbers seeded with the jet along direction a
  const Vec3* tangents[2] = {&jet.r_u, &jet.r_v};
  const Vec3* second[2][2] = {{&jet.r_uu, &jet.r_uv}, {&jet.r_uv, &jet.r_vv}};
  Vec3 xi{};
  Vec3 dxi[2];
  for (int a = 0; a < 2; ++a) {
    auto n = normal_from(model, lift(p, *tangents[a]), lift(jet.r_u, *second[0][a]), lift(jet.r_v, *second[1][a]));
    for (int k = 0; k < 3; ++k) {
      xi[k] = n[k].re;
      dxi[a][k] = n[k].eps;
    }
  }
  rep.normal = {jet.point, xi};

  for (int a = 0; a < 2; ++a) {
    Vec3 nabla_xi = dxi[a] + gamma.contract(*tangents[a], xi);
    for (int b = 0; b < 2; ++b) rep.second_form[a][b] = -inner(g, nabla_xi, *tangents[b]);
  }

  const Mat2& I = rep.first_form;
  const Mat2& h = rep.second_form;
  rep.shape_operator = mat_mul(inverse2(I), h);
  rep.mean_curvature = 0.5 * (rep.shape_operator[0][0] + rep.shape_operator[1][1]);

  // S = L^{-1} h L^{-T} with I = L L^T represents A in an I-orthonormal basis
  const double l00 = std::sqrt(I[0][0]);
  const double l10 = I[1][0] / l00;
  const double l11 = std::sqrt(I[1][1] - l10 * l10);
  const Mat2 l_inv{{{1.0 / l00, 0.0}, {-l10 / (l00 * l11), 1.0 / l11}}};
  const Mat2 l_inv_t{{{l_inv[0][0], l_inv[1][0]}, {l_inv[0][1], l_inv[1][1]}}};
  const Mat2 s = mat_mul(mat_mul(l_inv, h), l_inv_t);
  rep.norm_a_sq = s[0][0] * s[0][0] + s[1][1] * s[1][1] + s[0][1] * s[0][1] + s[1][0] * s[1][0];
  const double split = s[0][0] - s[1][1];
  rep.umbilicity_deficit = std::sqrt(0.5 * split * split + s[0][1] * s[0][1] + s[1][0] * s[1][0]);
  return rep;
}

AdaptedFrame adapted_frame(const SurfacePatch& patch, const ParamPoint& q) {
  ImmersionJet jet = immersion_jet(patch, q);
  const Vec3 p = jet.point.coords();
  const Mat3 g = patch.model().metric(p);
  Vec3 e1 = (1.0 / std::sqrt(inner(g, jet.r_u, jet.r_u))) * jet.r_u;
  Vec3 w = jet.r_v - inner(g, jet.r_v, e1) * e1;
  Vec3 e2 = (1.0 / std::sqrt(inner(g, w, w))) * w;
  return {{jet.point, e1}, {jet.point, e2}, {jet.point, normal_from(patch.model(), p, jet.r_u, jet.r_v)}};
}

// ---------------------------------------------------------------------------
// Scalar fields

namespace {

void require_stencil(const SurfacePatch& patch, const ParamPoint& q, double reach) {
  const ParamDomain& d = patch.domain();
  if (q.u - reach < d.u0 || q.u + reach > d.u1 || q.v - reach < d.v0 || q.v + reach > d.v1)
    throw OutOfDomain("difference stencil at " + describe(q) + " leaves the patch domain");
}

void require_step(const DifferenceOptions& options) {
  if (!(options.step > 0.0) || !std::isfinite(options.step)) throw InvalidArgument("difference step must be positive");
}

Vec2 central_partials(const ScalarField& f, const ParamPoint& q, double h) {
  return {(f(q.u + h, q.v) - f(q.u - h, q.v)) / (2.0 * h), (f(q.u, q.v + h) - f(q.u, q.v - h)) / (2.0 * h)};
}

Vec2 partials(const ScalarField& f, const ParamPoint& q, const DifferenceOptions& options) {
  Vec2 coarse = central_partials(f, q, options.step);
  if (!options.richardson) return coarse;
  Vec2 fine = central_partials(f, q, 0.5 * options.step);
  return {(4.0 * fine[0] - coarse[0]) / 3.0, (4.0 * fine[1] - coarse[1]) / 3.0};
}

double laplace_central(const SurfacePatch& patch, const ScalarField& f, const ParamPoint& q, double h) {
  // W^a = sqrt(det I) I^{ab} d_b f at a stencil node
  auto flux = [&](double u, double v) {
    Mat2 I = first_fundamental_form(patch, {u, v});
    Vec2 df = central_partials(f, {u, v}, h);
    Vec2 w = mat_vec(inverse2(I), df);
    double root = std::sqrt(det2(I));
    return Vec2{root * w[0], root * w[1]};
  };
  double div = (flux(q.u + h, q.v)[0] - flux(q.u - h, q.v)[0] + flux(q.u, q.v + h)[1] - flux(q.u, q.v - h)[1]) /
               (2.0 * h);
  return div / std::sqrt(det2(first_fundamental_form(patch, q)));
}

}  // namespace

Vec2 gradient_components(const SurfacePatch& patch, const ScalarField& f, const ParamPoint& q,
                         const DifferenceOptions& options) {
  require_step(options);
  require_stencil(patch, q, options.step);
  Mat2 I = first_fundamental_form(patch, q);
  return mat_vec(inverse2(I), partials(f, q, options));
}

TangentVector intrinsic_gradient(const SurfacePatch& patch, const ScalarField& f, const ParamPoint& q,
                                 const DifferenceOptions& options) {
  return push_forward(patch, q, gradient_components(patch, f, q, options));
}

double laplace_beltrami(const SurfacePatch& patch, const ScalarField& f, const ParamPoint& q,
                        const DifferenceOptions& options) {
  require_step(options);
  require_stencil(patch, q, 2.0 * options.step);
  double coarse = laplace_central(patch, f, q, options.step);
  if (!options.richardson) return coarse;
  double fine = laplace_central(patch, f, q, 0.5 * options.step);
  return (4.0 * fine - coarse) / 3.0;
}

ScalarField mean_curvature_field(const SurfacePatch& patch) {
  return [patch](double u, double v) { return shape_report(patch, {u, v}).mean_curvature; };
}

}  // namespace biharm
