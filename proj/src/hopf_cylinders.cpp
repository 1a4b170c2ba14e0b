#include "biharm/hopf_cylinders.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <memory>
#include <numbers>
#include <type_traits>

namespace biharm {

PlaneCurve::PlaneCurve(double s0, double s1, bool arclength) : s0_(s0), s1_(s1), arclength_(arclength) {
  if (!std::isfinite(s0) || !std::isfinite(s1) || !(s0 < s1))
    throw InvalidArgument("curve parameter interval must be finite and nonempty");
}

PlaneCurve coordinate_circle(double m, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho) || !std::isfinite(m)) throw InvalidArgument("circle radius must be positive");
  const double f = 1.0 + m * rho * rho;
  if (!(f > 0.05)) throw InvalidPoint("circle leaves the valid base domain");
  const double rate = f / rho;  // d(theta)/ds at unit h-speed
  return PlaneCurve::analytic(
      [rho, rate](const auto& s) {
        using std::cos;
        using std::sin;
        using T = std::decay_t<decltype(s)>;
        T theta = rate * s;
        return Vec2T<T>{rho * cos(theta), rho * sin(theta)};
      },
      0.0, 2.0 * std::numbers::pi * rho / f, true);
}

PlaneCurve geodesic_line(double m, double angle, double half_length) {
  if (!(half_length > 0.0) || !std::isfinite(half_length) || !std::isfinite(m) || !std::isfinite(angle))
    throw InvalidArgument("line half-length must be positive");
  const double k = std::sqrt(std::abs(m));
  if (m > 0.0 && !(k * half_length < 0.45 * std::numbers::pi))
    throw InvalidArgument("line too long for the chart at this m");
  if (m < 0.0) {
    double t = std::tanh(k * half_length);
    if (!(1.0 - t * t > 0.05)) throw InvalidPoint("line leaves the valid base domain");
  }
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);
  return PlaneCurve::analytic(
      [m, k, ca, sa](const auto& s) {
        using std::tan;
        using std::tanh;
        using T = std::decay_t<decltype(s)>;
        // sigma(s) inverts s = int_0^sigma dr / (1 + m r^2)
        T sigma = s;
        if (m > 0.0) sigma = tan(k * s) / k;
        if (m < 0.0) sigma = tanh(k * s) / k;
        return Vec2T<T>{ca * sigma, sa * sigma};
      },
      -half_length, half_length, true);
}

// ---------------------------------------------------------------------------

namespace {

/// Base-plane speed, generic in the scalar carried through the derivative.
template <typename U>
U speed_at(double m, const PlaneCurve& curve, const U& sigma) {
  using std::sqrt;
  Vec2T<Dual<U>> c = curve(Dual<U>(sigma, U(1.0)));
  U x = c[0].re, y = c[1].re, dx = c[0].eps, dy = c[1].eps;
  U f = 1.0 + m * (x * x + y * y);
  return sqrt(dx * dx + dy * dy) / f;
}

class ArclengthMap {
 public:
  ArclengthMap(double m, PlaneCurve curve, double tol) : m_(m), curve_(std::move(curve)), tol_(tol) {
    length_ = arc(curve_.s1());
    if (!(length_ > 0.0)) throw DegenerateImmersion("curve has zero length");
  }

  double length() const { return length_; }

  /// Curve parameter sigma at h-arclength s, differentiable in s.
  template <typename T>
  T sigma(const T& s) const {
    if constexpr (std::is_same_v<T, double>) {
      return solve(s);
    } else {
      using U = std::decay_t<decltype(s.re)>;
      U inner = sigma(s.re);
      return T(inner, s.eps / speed_at(m_, curve_, inner));
    }
  }

  const PlaneCurve& curve() const { return curve_; }

 private:
  double arc(double upper) const {
    if (upper == curve_.s0()) return 0.0;
    auto integrand = [this](double sig) { return speed_at(m_, curve_, sig); };
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, curve_.s0(), upper, 15, tol_);
  }

  double solve(double s) const {
    double lo = curve_.s0();
    double hi = curve_.s1();
    if (s <= 0.0) return lo;
    if (s >= length_) return hi;
    double sig = lo + (hi - lo) * (s / length_);
    for (int it = 0; it < 60; ++it) {
      double residual = arc(sig) - s;
      if (residual > 0.0) hi = sig; else lo = sig;
      double speed = speed_at(m_, curve_, sig);
      double next = speed > 0.0 ? sig - residual / speed : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - sig) <= 1e-15 * (1.0 + std::abs(sig))) return next;
      sig = next;
    }
    return sig;
  }

  double m_;
  PlaneCurve curve_;
  double tol_;
  double length_ = 0.0;
};

}  // namespace

PlaneCurve reparametrize_by_arclength(double m, const PlaneCurve& curve, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
  auto map = std::make_shared<const ArclengthMap>(m, curve, tol);
  return PlaneCurve::analytic([map](const auto& s) { return map->curve()(map->sigma(s)); }, 0.0, map->length(),
                              true);
}

double base_speed(double m, const PlaneCurve& curve, double s) { return speed_at(m, curve, s); }

double base_geodesic_curvature(double m, const PlaneCurve& curve, double s) {
  if (!curve.arclength()) throw InvalidArgument("curve must be parametrized by arclength; reparametrize first");
  D2 seed{D1(s, 1.0), D1(1.0, 0.0)};
  Vec2T<D2> c = curve(seed);
  const double x = c[0].re.re, y = c[1].re.re;
  const Vec2 v{c[0].re.eps, c[1].re.eps};
  const Vec2 acc{c[0].eps.eps, c[1].eps.eps};
  const double f = 1.0 + m * (x * x + y * y);
  const double v2 = v[0] * v[0] + v[1] * v[1];
  if (!(v2 > 0.0)) throw DegenerateImmersion("zero-speed curve point");

  // h = e^{2 phi} delta with phi = -ln F:
  // Gamma(v, v)^k = 2 v^k (d phi . v) - |v|^2 d_k phi
  const Vec2 dphi{-2.0 * m * x / f, -2.0 * m * y / f};
  const double dphi_v = dphi[0] * v[0] + dphi[1] * v[1];
  const Vec2 cov{acc[0] + 2.0 * v[0] * dphi_v - v2 * dphi[0], acc[1] + 2.0 * v[1] * dphi_v - v2 * dphi[1]};
  const Vec2 jv{-v[1], v[0]};
  const double h_cov_jv = (cov[0] * jv[0] + cov[1] * jv[1]) / (f * f);
  const double speed = std::sqrt(v2) / f;
  return h_cov_jv / (speed * speed * speed);
}

double base_gaussian_curvature(double m, double x, double y) {
  // K = -e^{-2 phi} Laplacian(phi) = F^2 Laplacian(ln F)
  auto second = [m](const D2& a, const D2& b) { return log(1.0 + m * (a * a + b * b)); };
  D2 xs{D1(x, 1.0), D1(1.0, 0.0)};
  D2 ys{D1(y, 1.0), D1(1.0, 0.0)};
  double lap = second(xs, D2(y)).eps.eps + second(D2(x), ys).eps.eps;
  double f = 1.0 + m * (x * x + y * y);
  return f * f * lap;
}

double circle_for_kg(double m, double kappa) {
  if (!(m > 0.0)) throw InvalidArgument("circle_for_kg requires m > 0");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw InvalidArgument("target geodesic curvature must be >= 0");
  return 2.0 / (kappa + std::sqrt(kappa * kappa + 4.0 * m));
}

SurfacePatch lift_cylinder(double m, double l, const PlaneCurve& curve, double t0, double t1) {
  return SurfacePatch::analytic(MetricModel::bcv(m, l), {curve.s0(), curve.s1(), t0, t1},
                                [curve](const auto& s, const auto& t) {
                                  using T = std::decay_t<decltype(s)>;
                                  Vec2T<T> xy = curve(s);
                                  return Vec3T<T>{xy[0], xy[1], t};
                                });
}

double fiber_torsion(double m, double l, const PlaneCurve& curve, double s) {
  if (!curve.arclength()) throw InvalidArgument("curve must be parametrized by arclength; reparametrize first");
  Vec2T<D1> c = curve(D1(s, 1.0));
  const double x = c[0].re, y = c[1].re, dx = c[0].eps, dy = c[1].eps;
  if (!(dx * dx + dy * dy > 0.0)) throw DegenerateImmersion("zero-speed curve point");
  const MetricModel model = MetricModel::bcv(m, l);
  const ChartPoint p{x, y, 0.0};
  const auto frame = orthonormal_frame_at(model, p);
  const double f = 1.0 + m * (x * x + y * y);
  const Vec3& e1 = frame[0].components;
  const Vec3& e2 = frame[1].components;
  const TangentVector horizontal{p, (dx / f) * e1 + (dy / f) * e2};
  const TangentVector normal{p, (dy / f) * e1 - (dx / f) * e2};
  TangentVector d = covariant_derivative_at(model, p, frame_field(model, 3), horizontal);
  return -inner_at(model, d, normal);
}

double HopfInvariants::radius() const {
  if (!extrinsic_radius) throw InvalidArgument("extrinsic radius is defined only for m > 0");
  return *extrinsic_radius;
}

HopfInvariants hopf_invariants(double m, double l, double kappa_g) {
  if (!std::isfinite(m) || !std::isfinite(l)) throw InvalidArgument("m and l must be finite");
  if (!(kappa_g >= 0.0) || !std::isfinite(kappa_g)) throw InvalidArgument("kappa_g must be finite and >= 0");
  HopfInvariants inv;
  inv.kappa_g = kappa_g;
  inv.tau_g = -0.5 * l;
  inv.mean_curvature = 0.5 * kappa_g;
  inv.norm_a_sq = kappa_g * kappa_g + 2.0 * inv.tau_g * inv.tau_g;
  if (m > 0.0) inv.extrinsic_radius = 1.0 / std::sqrt(kappa_g * kappa_g + 4.0 * m);
  return inv;
}

CurvatureProfile CurvatureProfile::constant_from_square(double q) {
  if (!(q >= 0.0) || !std::isfinite(q)) throw InvalidArgument("kappa^2 must be finite and >= 0");
  CurvatureProfile p;
  const double k = std::sqrt(q);
  p.jet_ = [k, q](double) { return Jet{k, 0.0, 0.0, q}; };
  return p;
}

CurvatureProfile CurvatureProfile::sampled(std::function<double(double)> f, double step) {
  if (!(step > 0.0)) throw InvalidArgument("difference step must be positive");
  CurvatureProfile p;
  p.jet_ = [f = std::move(f), step](double s) {
    double c = f(s), plus = f(s + step), minus = f(s - step);
    return Jet{c, (plus - minus) / (2.0 * step), (plus - 2.0 * c + minus) / (step * step), c * c};
  };
  return p;
}

std::array<double, 3> curve_ode_residual(const CurvatureProfile& kappa, double m, double l, double s) {
  const CurvatureProfile::Jet k = kappa.jet(s);
  return {k.d2 + k.value * ((4.0 * m - l * l) - k.square), 3.0 * k.value * k.d1, -0.5 * l * k.d1};
}

}  // namespace biharm
