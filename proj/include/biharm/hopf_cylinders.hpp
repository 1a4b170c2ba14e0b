#pragma once

// Curves in the base plane (R^2, h = (dx^2 + dy^2)/F^2), F = 1 + m(x^2 + y^2),
// and the Hopf cylinders r(s, t) = (x(s), y(s), t) over them in BCV(m, l).

#include <array>
#include <functional>
#include <optional>

#include "biharm/surface_calculus.hpp"

namespace biharm {

template <typename T>
using Vec2T = std::array<T, 2>;

/// s -> (x(s), y(s)), evaluable on doubles and on dual numbers up to second
/// order so that velocity and acceleration are exact.
class PlaneCurve {
 public:
  template <typename F>
  static PlaneCurve analytic(F f, double s0, double s1, bool arclength) {
    PlaneCurve c(s0, s1, arclength);
    c.f0_ = [f](double s) { return Vec2T<double>(f(s)); };
    c.f1_ = [f](const D1& s) { return Vec2T<D1>(f(s)); };
    c.f2_ = [f](const D2& s) { return Vec2T<D2>(f(s)); };
    return c;
  }

  double s0() const { return s0_; }
  double s1() const { return s1_; }
  /// Parametrized by h-arclength.
  bool arclength() const { return arclength_; }

  Vec2T<double> operator()(double s) const { return f0_(s); }
  Vec2T<D1> operator()(const D1& s) const { return f1_(s); }
  Vec2T<D2> operator()(const D2& s) const { return f2_(s); }

 private:
  PlaneCurve(double s0, double s1, bool arclength);

  double s0_;
  double s1_;
  bool arclength_;
  std::function<Vec2T<double>(double)> f0_;
  std::function<Vec2T<D1>(const D1&)> f1_;
  std::function<Vec2T<D2>(const D2&)> f2_;
};

/// Origin-centred chart circle of radius rho, counterclockwise, by h-arclength.
PlaneCurve coordinate_circle(double m, double rho);

/// Geodesic through the origin in direction angle, by h-arclength, s in
/// [-half_length, half_length].
PlaneCurve geodesic_line(double m, double angle, double half_length);

/// Reparametrize by h-arclength: s(sigma) is integrated with adaptive
/// Gauss-Kronrod quadrature and inverted by safeguarded Newton iteration.
PlaneCurve reparametrize_by_arclength(double m, const PlaneCurve& curve, double tol = 1e-10);

/// h-speed |alpha'(s)|_h.
double base_speed(double m, const PlaneCurve& curve, double s);

/// Signed geodesic curvature in (R^2, h); positive for counterclockwise
/// circles about the origin.
double base_geodesic_curvature(double m, const PlaneCurve& curve, double s);

/// Gaussian curvature of (R^2, h) at (x, y).
double base_gaussian_curvature(double m, double x, double y);

/// Chart radius rho of the origin-centred circle with geodesic curvature
/// kappa: the positive root of m rho^2 + kappa rho - 1 = 0.
double circle_for_kg(double m, double kappa);

/// Hopf cylinder over the curve in BCV(m, l), parameters (s, t).
SurfacePatch lift_cylinder(double m, double l, const PlaneCurve& curve, double t0 = -1.0, double t1 = 1.0);

/// tau_g = -g(nabla_X E3, xi) along the lift, with X and xi the horizontal
/// lifts of the unit tangent and unit normal of the base curve.
double fiber_torsion(double m, double l, const PlaneCurve& curve, double s);

struct HopfInvariants {
  double kappa_g = 0.0;
  double tau_g = 0.0;
  double mean_curvature = 0.0;
  double norm_a_sq = 0.0;
  /// Radius of the base circle seen in Euclidean 3-space; m > 0 only.
  std::optional<double> extrinsic_radius;

  /// Throws InvalidArgument when the radius is undefined (m <= 0).
  double radius() const;
};

/// Closed-form invariants of a Hopf cylinder over a curve of constant
/// geodesic curvature kappa_g.
HopfInvariants hopf_invariants(double m, double l, double kappa_g);

/// Geodesic-curvature profile s -> kappa(s) with first and second derivatives.
class CurvatureProfile {
 public:
  struct Jet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double square = 0.0;
  };

  /// Exact derivatives by dual numbers; f must accept double and D2.
  template <typename F>
  static CurvatureProfile analytic(F f) {
    CurvatureProfile p;
    p.jet_ = [f](double s) {
      D2 x{D1(s, 1.0), D1(1.0, 0.0)};
      D2 k = f(x);
      return Jet{k.re.re, k.re.eps, k.eps.eps, k.re.re * k.re.re};
    };
    return p;
  }

  /// kappa = sqrt(q), with kappa^2 carried as q itself.
  static CurvatureProfile constant_from_square(double q);

  /// Derivatives by central differences of the given step.
  static CurvatureProfile sampled(std::function<double(double)> f, double step = 1e-3);

  Jet jet(double s) const { return jet_(s); }

 private:
  std::function<Jet(double)> jet_;
};

/// (kappa'' - kappa^3 + (4m - l^2) kappa,  3 kappa kappa',  -(l/2) kappa').
std::array<double, 3> curve_ode_residual(const CurvatureProfile& kappa, double m, double l, double s);

}  // namespace biharm
