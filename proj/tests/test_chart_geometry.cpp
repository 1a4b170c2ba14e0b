#include <doctest.h>

#include <cmath>
#include <limits>

#include "biharm/chart_geometry.hpp"
#include "biharm/verify/sampling.hpp"

using namespace biharm;

namespace {

Vec3 coeffs(const MetricModel& m, const TangentVector& v) { return frame_coefficients(m, v); }

void check_vec(const Vec3& got, const Vec3& want, double tol = 1e-12) {
  for (int i = 0; i < 3; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol));
}

// Symbolic expansion of (dx^2 + dy^2)/F^2 + (dz + (l/2)(y dx - x dy)/F)^2.
Mat3 bcv_metric_oracle(double m, double l, double x, double y) {
  const double f = 1.0 + m * (x * x + y * y);
  const double a = 0.5 * l * y / f, b = -0.5 * l * x / f;
  return {{{1.0 / (f * f) + a * a, a * b, a}, {a * b, 1.0 / (f * f) + b * b, b}, {a, b, 1.0}}};
}

}  // namespace

TEST_SUITE("chart_geometry") {
  TEST_CASE("make_model and metric_at examples") {
    auto e = make_model(ModelKind::bcv, {.m = 0.0, .l = 0.0});
    Mat3 g = metric_at(e, {0.3, -1.7, 4.0});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(g[i][j] == (i == j ? 1.0 : 0.0));

    CHECK(metric_at(MetricModel::bcv(1.0, 0.0), {1.0, 0.0, 0.0})[0][0] == doctest::Approx(0.25));
    CHECK(metric_at(MetricModel::sol(), {0.0, 0.0, std::log(2.0)})[0][0] == doctest::Approx(4.0));
    CHECK(metric_at(MetricModel::bcv(1.0, 2.0), {0.0, 1.0, 0.0})[0][2] == doctest::Approx(0.5));

    Mat3 o = metric_at(MetricModel::bcv(-0.3, 1.7), {0.0, 0.0, 2.0});
    Mat3 s = metric_at(MetricModel::sol(), {0.0, 0.0, 0.0});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(o[i][j] == (i == j ? 1.0 : 0.0));
        CHECK(s[i][j] == (i == j ? 1.0 : 0.0));
      }
    CHECK(make_model("sol", {}).kind() == ModelKind::sol);
    CHECK(make_model("space-form", {.c = 1.0}).c() == 1.0);
  }

  TEST_CASE("BCV metric matches the symbolic expansion of the coframe") {
    verify::QuasiRandomSampler rng(7);
    for (auto [m, l] : {std::pair{1.0, 2.0}, std::pair{0.25, -1.0}, std::pair{-0.125, 0.5}}) {
      MetricModel model = MetricModel::bcv(m, l);
      for (int n = 0; n < 20; ++n) {
        ChartPoint p = rng.next_in(model, {-0.8, -0.8, -1.0}, {0.8, 0.8, 1.0});
        Mat3 g = metric_at(model, p);
        Mat3 want = bcv_metric_oracle(m, l, p.x, p.y);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) CHECK(g[i][j] == doctest::Approx(want[i][j]).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("model errors") {
    CHECK_THROWS_AS(parse_model_kind("hyperbolic-ish"), InvalidArgument);
    CHECK_THROWS_AS(MetricModel::bcv(std::numeric_limits<double>::quiet_NaN(), 0.0), InvalidArgument);
    CHECK_THROWS_AS(MetricModel::bcv(1.0, std::numeric_limits<double>::infinity()), InvalidArgument);
    CHECK_THROWS_AS(metric_at(MetricModel::bcv(-1.0, 0.0), {1.0, 0.0, 0.0}), InvalidPoint);
    // F = 0.04 is below the 0.05 floor
    CHECK_THROWS_AS(metric_at(MetricModel::bcv(-1.0, 0.0), {std::sqrt(0.96), 0.0, 0.0}), InvalidPoint);
    CHECK_NOTHROW(metric_at(MetricModel::bcv(-1.0, 0.0), {std::sqrt(0.9), 0.0, 0.0}));
    CHECK_THROWS_AS(metric_at(MetricModel::sol(), {0.0, std::numeric_limits<double>::quiet_NaN(), 0.0}), InvalidPoint);
  }

  TEST_CASE("orthonormal frame examples") {
    auto f0 = orthonormal_frame_at(MetricModel::bcv(0.7, -1.3), {0.0, 0.0, 0.5});
    check_vec(f0[0].components, {1, 0, 0});
    check_vec(f0[1].components, {0, 1, 0});
    check_vec(f0[2].components, {0, 0, 1});
    check_vec(orthonormal_frame_at(MetricModel::sol(), {0.0, 0.0, 1.0})[0].components, {std::exp(-1.0), 0, 0});
    check_vec(orthonormal_frame_at(MetricModel::bcv(1.0, 2.0), {0.0, 1.0, 0.0})[0].components, {2, 0, -1});
  }

  TEST_CASE("christoffels and covariant derivative examples") {
    Christoffels flat = christoffels_at(MetricModel::bcv(0.0, 0.0), {0.4, 0.1, -2.0});
    for (auto& a : flat.gamma)
      for (auto& b : a)
        for (double v : b) CHECK(v == 0.0);

    for (double l : {0.0, 0.7, 2.0}) {
      MetricModel model = MetricModel::bcv(1.0, l);
      ChartPoint p{0.0, 1.0, 0.0};
      auto e = orthonormal_frame_at(model, p);
      check_vec(coeffs(model, covariant_derivative_at(model, p, frame_field(model, 1), e[0])), {0, 2, 0});
    }
    {
      MetricModel model = MetricModel::bcv(1.0, 2.0);
      ChartPoint p{0.3, -0.2, 0.1};
      auto e = orthonormal_frame_at(model, p);
      check_vec(coeffs(model, covariant_derivative_at(model, p, frame_field(model, 1), e[2])), {0, -1, 0});
    }
    {
      MetricModel sol = MetricModel::sol();
      ChartPoint p{0.2, 0.5, -0.7};
      auto e = orthonormal_frame_at(sol, p);
      check_vec(coeffs(sol, covariant_derivative_at(sol, p, frame_field(sol, 1), e[0])), {0, 0, -1});
      check_vec(coeffs(sol, covariant_derivative_at(sol, p, frame_field(sol, 2), e[1])), {0, 0, 1});
    }
    {
      MetricModel eu = MetricModel::bcv(0.0, 0.0);
      ChartPoint p{1.0, 2.0, 3.0};
      auto constant = [](const Vec3T<D1>&) { return Vec3T<D1>{D1(1.0), D1(-2.0), D1(0.5)}; };
      check_vec(covariant_derivative_at(eu, p, constant, {p, {0.3, 0.1, -0.4}}).components, {0, 0, 0});
    }
  }

  TEST_CASE("covariant derivative is linear in the direction and obeys Leibniz") {
    MetricModel model = MetricModel::bcv(0.5, 1.5);
    ChartPoint p{0.2, -0.3, 0.4};
    auto y = [](const Vec3T<D1>& q) { return Vec3T<D1>{q[0] * q[1], q[2] + 1.0, q[0] * q[0]}; };
    auto fy = [&](const Vec3T<D1>& q) {
      D1 f = q[0] * q[0] + q[2];
      Vec3T<D1> v = y(q);
      return Vec3T<D1>{f * v[0], f * v[1], f * v[2]};
    };
    TangentVector a{p, {0.3, -0.7, 0.2}}, b{p, {-1.1, 0.4, 0.9}}, ab{p, 2.0 * a.components + b.components};
    Vec3 lhs = covariant_derivative_at(model, p, y, ab).components;
    Vec3 rhs = 2.0 * covariant_derivative_at(model, p, y, a).components + covariant_derivative_at(model, p, y, b).components;
    check_vec(lhs, rhs, 1e-13);

    // nabla_X (f Y) = X(f) Y + f nabla_X Y
    const double f = p.x * p.x + p.z;
    const double xf = 2.0 * p.x * a.components[0] + a.components[2];
    Vec3 y0{p.x * p.y, p.z + 1.0, p.x * p.x};
    Vec3 want = xf * y0 + f * covariant_derivative_at(model, p, y, a).components;
    check_vec(covariant_derivative_at(model, p, fy, a).components, want, 1e-13);
  }

  TEST_CASE("Lie bracket examples") {
    MetricModel model = MetricModel::bcv(1.0, 2.0);
    check_vec(coeffs(model, lie_bracket_frame_at(model, {1.0, 0.0, 0.0}, 1, 2)), {0, 2, 2});
    check_vec(coeffs(model, lie_bracket_frame_at(model, {0.3, 0.6, 1.0}, 1, 3)), {0, 0, 0});
    check_vec(coeffs(MetricModel::sol(), lie_bracket_frame_at(MetricModel::sol(), {0.1, 0.2, 0.3}, 2, 3)), {0, -1, 0});
    Vec3 ab = lie_bracket_frame_at(model, {0.2, 0.3, 0.0}, 1, 2).components;
    Vec3 ba = lie_bracket_frame_at(model, {0.2, 0.3, 0.0}, 2, 1).components;
    check_vec(ab + ba, {0, 0, 0});
    CHECK_THROWS_AS(lie_bracket_frame_at(model, {0, 0, 0}, 0, 2), InvalidArgument);
    CHECK_THROWS_AS(frame_field(model, 4), InvalidArgument);
  }

  TEST_CASE("Riemann and Ricci examples") {
    MetricModel model = MetricModel::bcv(1.0, 2.0);
    ChartPoint p{0.3, -0.4, 0.2};
    auto e = orthonormal_frame_at(model, p);
    CHECK(riemann_at(model, p, e[0], e[1], e[0], e[1]) == doctest::Approx(1.0));
    CHECK(riemann_at(model, p, e[0], e[2], e[0], e[2]) == doctest::Approx(1.0));
    CHECK(ricci_at(model, p, e[2], e[2]) == doctest::Approx(2.0));

    MetricModel m10 = MetricModel::bcv(1.0, 0.0);
    auto e10 = orthonormal_frame_at(m10, p);
    CHECK(ricci_at(m10, p, e10[0], e10[0]) == doctest::Approx(4.0));

    MetricModel sol = MetricModel::sol();
    auto s = orthonormal_frame_at(sol, p);
    CHECK(riemann_at(sol, p, s[0], s[2], s[0], s[2]) == doctest::Approx(-1.0));
    CHECK(ricci_at(sol, p, s[0], s[0]) == doctest::Approx(0.0));
    CHECK(ricci_at(sol, p, s[2], s[2]) == doctest::Approx(-2.0));

    TangentVector off{{0.0, 0.0, 0.0}, {1, 0, 0}};
    CHECK_THROWS_AS(riemann_at(model, p, e[0], e[1], e[0], off), InvalidPoint);
    CHECK_THROWS_AS(ricci_at(model, p, off, e[0]), InvalidPoint);
    CHECK_THROWS_AS(ricci_operator_at(model, p, off), InvalidPoint);
  }

  TEST_CASE("Ricci operator is self-adjoint and represents Ric") {
    MetricModel model = MetricModel::bcv(0.25, 1.0);
    ChartPoint p{0.5, 0.1, -0.3};
    TangentVector z{p, {0.3, -0.2, 1.1}}, w{p, {-0.5, 0.9, 0.4}};
    TangentVector rz = ricci_operator_at(model, p, z), rw = ricci_operator_at(model, p, w);
    CHECK(inner_at(model, rz, w) == doctest::Approx(ricci_at(model, p, z, w)).epsilon(1e-12));
    CHECK(inner_at(model, rz, w) == doctest::Approx(inner_at(model, z, rw)).epsilon(1e-12));
  }

  TEST_CASE("space-form chart is Einstein with Ric = 2c g") {
    for (double c : {1.0, -1.0, 0.5}) {
      MetricModel model = MetricModel::space_form(c);
      ChartPoint p{0.3, -0.5, 0.4};
      TangentVector x{p, {0.7, 0.2, -1.3}};
      CHECK(ricci_at(model, p, x, x) == doctest::Approx(2.0 * c * inner_at(model, x, x)).epsilon(1e-12));
      auto e = orthonormal_frame_at(model, p);
      CHECK(riemann_at(model, p, e[0], e[1], e[0], e[1]) == doctest::Approx(c).epsilon(1e-12));
    }
  }

  TEST_CASE("norm is nonnegative and zero only for the zero vector") {
    MetricModel model = MetricModel::sol();
    ChartPoint p{0, 0, 0.3};
    CHECK(norm_at(model, {p, {0, 0, 0}}) == 0.0);
    CHECK(norm_at(model, {p, {0, 1e-8, 0}}) > 0.0);
  }
}
