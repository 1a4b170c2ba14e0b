#include <doctest.h>

#include <cmath>
#include <numbers>

#include "biharm/hopf_cylinders.hpp"

using namespace biharm;
using std::numbers::pi;

namespace {

double kg_circle(double m, double rho) { return (1.0 - m * rho * rho) / rho; }

}  // namespace

TEST_SUITE("hopf_cylinders") {
  TEST_CASE("geodesic curvature of coordinate circles") {
    for (auto [m, rho] : {std::pair{1.0, 0.5}, std::pair{1.0, std::sqrt(2.0) - 1.0}, std::pair{0.0, 2.0},
                          std::pair{-0.25, 1.0}, std::pair{0.3, 1.2}}) {
      PlaneCurve c = coordinate_circle(m, rho);
      for (double s : {c.s0(), 0.5 * (c.s0() + c.s1()), 0.9 * c.s1()}) {
        CHECK(base_speed(m, c, s) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(base_geodesic_curvature(m, c, s) == doctest::Approx(kg_circle(m, rho)).epsilon(1e-12));
      }
    }
    CHECK(base_geodesic_curvature(1.0, coordinate_circle(1.0, 1.0), 0.2) == doctest::Approx(0.0).scale(1.0));
  }

  TEST_CASE("circle_for_kg inverts the circle curvature") {
    CHECK(circle_for_kg(1.0, 2.0) == doctest::Approx(std::sqrt(2.0) - 1.0));
    CHECK(circle_for_kg(1.0, 0.0) == doctest::Approx(1.0));
    for (double m : {0.25, 1.0, 4.0})
      for (double k : {0.1, 1.0, 3.0}) CHECK(kg_circle(m, circle_for_kg(m, k)) == doctest::Approx(k).epsilon(1e-13));
    CHECK_THROWS_AS(circle_for_kg(0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(circle_for_kg(1.0, -1.0), InvalidArgument);
    CHECK_THROWS_AS(circle_for_kg(1.0, std::nan("")), InvalidArgument);
  }

  TEST_CASE("coordinate_circle and geodesic_line errors") {
    CHECK_THROWS_AS(coordinate_circle(1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(coordinate_circle(-1.0, 1.0), InvalidPoint);
    CHECK_THROWS_AS(geodesic_line(1.0, 0.0, 0.0), InvalidArgument);
    CHECK_NOTHROW(geodesic_line(-0.5, 0.3, 0.5));
  }

  TEST_CASE("geodesic lines have zero geodesic curvature") {
    for (double m : {1.0, -0.5, 0.0}) {
      PlaneCurve g = geodesic_line(m, 0.3, 0.5);
      for (double s : {-0.4, 0.0, 0.3}) {
        CHECK(base_speed(m, g, s) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(base_geodesic_curvature(m, g, s)) < 1e-10);
      }
    }
  }

  TEST_CASE("reparametrize_by_arclength") {
    const double m = 1.0, rho = 0.5;
    PlaneCurve euclid = PlaneCurve::analytic(
        [rho](auto s) {
          using std::cos, std::sin;
          return Vec2T<decltype(s)>{rho * cos(s), rho * sin(s)};
        },
        0.0, 2.0 * pi, false);
    CHECK_THROWS_AS(base_geodesic_curvature(m, euclid, 0.1), InvalidArgument);
    CHECK_THROWS_AS(fiber_torsion(m, 0.0, euclid, 0.1), InvalidArgument);

    PlaneCurve arc = reparametrize_by_arclength(m, euclid);
    CHECK(arc.arclength());
    const double length = 2.0 * pi * rho / (1.0 + m * rho * rho);
    CHECK(arc.s1() - arc.s0() == doctest::Approx(length).epsilon(1e-10));
    for (double s : {0.1, 0.7, 1.9}) {
      CHECK(base_speed(m, arc, s) == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(base_geodesic_curvature(m, arc, s) == doctest::Approx(kg_circle(m, rho)).epsilon(1e-7));
    }

    PlaneCurve stuck = PlaneCurve::analytic(
        [](auto s) {
          using T = decltype(s);
          return Vec2T<T>{T(0.2), T(0.1)};
        },
        0.0, 1.0, false);
    CHECK_THROWS_AS(reparametrize_by_arclength(m, stuck), DegenerateImmersion);
    CHECK_THROWS_AS(reparametrize_by_arclength(m, euclid, 0.0), InvalidArgument);
  }

  TEST_CASE("lifted circle has |H| = kappa/2 and lines lift to minimal surfaces") {
    SurfacePatch lift = lift_cylinder(1.0, 0.0, coordinate_circle(1.0, circle_for_kg(1.0, 2.0)));
    for (ParamPoint q : {ParamPoint{0.1, 0.0}, ParamPoint{1.0, 0.5}}) {
      ShapeReport rep = shape_report(lift, q);
      CHECK(std::abs(rep.mean_curvature) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(rep.norm_a_sq == doctest::Approx(4.0).epsilon(1e-12));
    }
    SurfacePatch plane = lift_cylinder(1.0, 0.7, geodesic_line(1.0, 0.0, 0.5));
    CHECK(std::abs(shape_report(plane, {0.2, 0.3}).mean_curvature) < 1e-12);
  }

  TEST_CASE("fiber torsion is l/2 in magnitude and matches hopf_invariants") {
    for (auto [m, l] : {std::pair{1.0, 0.0}, std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{-0.2, 1.5}}) {
      PlaneCurve c = coordinate_circle(m, 0.6);
      const double tau = fiber_torsion(m, l, c, 0.4);
      CHECK(std::abs(tau) == doctest::Approx(0.5 * l).epsilon(1e-12));
      CHECK(std::abs(hopf_invariants(m, l, 1.0).tau_g) == doctest::Approx(std::abs(tau)));
    }
  }

  TEST_CASE("hopf_invariants examples") {
    HopfInvariants a = hopf_invariants(1.0, 0.0, 2.0);
    CHECK(a.mean_curvature == doctest::Approx(1.0));
    CHECK(a.norm_a_sq == doctest::Approx(4.0));
    CHECK(a.radius() == doctest::Approx(1.0 / std::sqrt(8.0)));

    HopfInvariants b = hopf_invariants(1.0, 1.0, std::sqrt(3.0));
    CHECK(b.norm_a_sq == doctest::Approx(3.5));
    CHECK(b.mean_curvature == doctest::Approx(0.5 * std::sqrt(3.0)));

    CHECK_THROWS_AS(hopf_invariants(0.0, 1.0, 1.0).radius(), InvalidArgument);
    CHECK_THROWS_AS(hopf_invariants(-1.0, 1.0, 1.0).radius(), InvalidArgument);
    CHECK_THROWS_AS(hopf_invariants(1.0, 1.0, -1.0), InvalidArgument);
  }

  TEST_CASE("curve ODE examples") {
    auto zero = [](const std::array<double, 3>& r) { return std::abs(r[0]) + std::abs(r[1]) + std::abs(r[2]); };
    CHECK(zero(curve_ode_residual(CurvatureProfile::constant_from_square(3.0), 1.0, 1.0, 0.0)) == 0.0);
    CHECK(zero(curve_ode_residual(CurvatureProfile::constant_from_square(0.0), 0.3, 2.0, 1.0)) == 0.0);

    auto lin = curve_ode_residual(CurvatureProfile::analytic([](auto s) { return 2.0 * s + 1.0; }), 1.0, 1.0, 0.5);
    CHECK(lin[0] == doctest::Approx(-8.0 + 3.0 * 2.0));
    CHECK(lin[1] == doctest::Approx(12.0));
    CHECK(lin[2] == doctest::Approx(-1.0));

    auto off = curve_ode_residual(CurvatureProfile::constant_from_square(2.0), 1.0, 1.0, 0.0);
    CHECK(off[0] == doctest::Approx(std::sqrt(2.0) * (3.0 - 2.0)));

    CurvatureProfile sampled = CurvatureProfile::sampled([](double s) { return std::sin(s); }, 1e-3);
    CurvatureProfile exact = CurvatureProfile::analytic([](auto s) {
      using std::sin;
      return sin(s);
    });
    auto rs = curve_ode_residual(sampled, 0.5, 0.5, 0.7);
    auto re = curve_ode_residual(exact, 0.5, 0.5, 0.7);
    for (int i = 0; i < 3; ++i) CHECK(rs[i] == doctest::Approx(re[i]).epsilon(1e-6));
    CHECK_THROWS_AS(CurvatureProfile::constant_from_square(-1.0), InvalidArgument);
    CHECK_THROWS_AS(CurvatureProfile::sampled([](double) { return 0.0; }, 0.0), InvalidArgument);
  }

  TEST_CASE("base curvature is constant 4m") {
    for (double m : {1.0, -0.3, 0.0, 2.5}) CHECK(base_gaussian_curvature(m, 0.0, 0.0) == doctest::Approx(4.0 * m));
    CHECK(base_gaussian_curvature(1.0, 0.4, -0.2) == doctest::Approx(4.0));
  }
}
