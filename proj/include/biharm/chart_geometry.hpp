#pragma once

// Homogeneous 3-manifolds as metric charts on R^3.
//
//   BCV(m, l)      g = (dx^2 + dy^2)/F^2 + (dz + (l/2)(y dx - x dy)/F)^2,
//                  F = 1 + m(x^2 + y^2)
//   Sol            g = e^{2z} dx^2 + e^{-2z} dy^2 + dz^2
//   SpaceForm(c)   g = delta / S^2,  S = 1 + (c/4)(x^2 + y^2 + z^2)
//
// Connection and curvature are computed from the metric components with
// nested dual numbers, so every derivative is exact to rounding.
//
// Conventions:
//   R(X,Y)Z       = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
//   R(X,Y,Z,W)    = g(R(Z,W)Y, X)
//   Ric(X,Y)      = sum_i g(R(X,e_i)e_i, Y)
// Frame indices in the public API are 1-based (E1, E2, E3).

#include <array>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include "biharm/dual.hpp"
#include "biharm/errors.hpp"
#include "biharm/linalg.hpp"

namespace biharm {

struct ChartPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 coords() const { return {x, y, z}; }
  static ChartPoint from(const Vec3& c) { return {c[0], c[1], c[2]}; }
  bool operator==(const ChartPoint&) const = default;
};

/// Coordinate components of a tangent vector at a chart point.
struct TangentVector {
  ChartPoint base;
  Vec3 components{};
};

enum class ModelKind { bcv, sol, space_form };

struct ModelParams {
  double m = 0.0;
  double l = 0.0;
  double c = 0.0;
  /// Points with conformal factor at or below this value are rejected
  /// (BCV with m < 0, space forms with c < 0).
  double domain_floor = 0.05;
};

ModelKind parse_model_kind(std::string_view name);
std::string to_string(ModelKind kind);

class MetricModel {
 public:
  MetricModel(ModelKind kind, ModelParams params);

  static MetricModel bcv(double m, double l) { return {ModelKind::bcv, {.m = m, .l = l}}; }
  static MetricModel sol() { return {ModelKind::sol, {}}; }
  static MetricModel space_form(double c) { return {ModelKind::space_form, {.c = c}}; }

  ModelKind kind() const { return kind_; }
  const ModelParams& params() const { return params_; }
  double m() const { return params_.m; }
  double l() const { return params_.l; }
  double c() const { return params_.c; }
  std::string describe() const;

  bool contains(const ChartPoint& p) const;
  /// Throws InvalidPoint when p is outside the valid domain.
  void require_valid(const ChartPoint& p) const;

  /// Metric components g_ij at p.
  template <typename T>
  Mat3T<T> metric(const Vec3T<T>& p) const;

  /// Orthonormal frame; element i holds the coordinate components of E_{i+1}.
  template <typename T>
  std::array<Vec3T<T>, 3> frame(const Vec3T<T>& p) const;

 private:
  ModelKind kind_;
  ModelParams params_;
};

MetricModel make_model(ModelKind kind, ModelParams params);
MetricModel make_model(std::string_view kind, ModelParams params);

// ---------------------------------------------------------------------------

template <typename T>
Mat3T<T> MetricModel::metric(const Vec3T<T>& p) const {
  using std::exp;
  const T& x = p[0];
  const T& y = p[1];
  const T& z = p[2];
  Mat3T<T> g{};
  for (auto& row : g) row.fill(T(0.0));
  switch (kind_) {
    case ModelKind::bcv: {
      const double m = params_.m;
      const double l = params_.l;
      T f = 1.0 + m * (x * x + y * y);
      T inv_f2 = 1.0 / (f * f);
      // vertical coframe: dz + a dx + b dy
      T a = (0.5 * l) * y / f;
      T b = -((0.5 * l) * x / f);
      g[0][0] = inv_f2 + a * a;
      g[1][1] = inv_f2 + b * b;
      g[2][2] = T(1.0);
      g[0][1] = g[1][0] = a * b;
      g[0][2] = g[2][0] = a;
      g[1][2] = g[2][1] = b;
      break;
    }
    case ModelKind::sol:
      g[0][0] = exp(2.0 * z);
      g[1][1] = exp(-2.0 * z);
      g[2][2] = T(1.0);
      break;
    case ModelKind::space_form: {
      T s = 1.0 + (0.25 * params_.c) * (x * x + y * y + z * z);
      T w = 1.0 / (s * s);
      g[0][0] = w;
      g[1][1] = w;
      g[2][2] = w;
      break;
    }
  }
  return g;
}

template <typename T>
std::array<Vec3T<T>, 3> MetricModel::frame(const Vec3T<T>& p) const {
  using std::exp;
  const T& x = p[0];
  const T& y = p[1];
  const T& z = p[2];
  const T zero(0.0);
  switch (kind_) {
    case ModelKind::bcv: {
      const double m = params_.m;
      const double l = params_.l;
      T f = 1.0 + m * (x * x + y * y);
      return {{{f, zero, -((0.5 * l) * y)}, {zero, f, (0.5 * l) * x}, {zero, zero, T(1.0)}}};
    }
    case ModelKind::sol:
      return {{{exp(-z), zero, zero}, {zero, exp(z), zero}, {zero, zero, T(1.0)}}};
    case ModelKind::space_form: {
      T s = 1.0 + (0.25 * params_.c) * (x * x + y * y + z * z);
      return {{{s, zero, zero}, {zero, s, zero}, {zero, zero, s}}};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Accessors and first-order data

Mat3 metric_at(const MetricModel& model, const ChartPoint& p);

double inner_at(const MetricModel& model, const TangentVector& a, const TangentVector& b);
double norm_at(const MetricModel& model, const TangentVector& v);

/// E1, E2, E3 at p.
std::array<TangentVector, 3> orthonormal_frame_at(const MetricModel& model, const ChartPoint& p);

/// (g(v,E1), g(v,E2), g(v,E3)): coefficients of v in the orthonormal frame.
Vec3 frame_coefficients(const MetricModel& model, const TangentVector& v);

/// Christoffel symbols of the second kind: gamma[k][i][j] = Gamma^k_ij.
struct Christoffels {
  std::array<Mat3, 3> gamma{};

  /// Gamma^k_ij a^i b^j.
  Vec3 contract(const Vec3& a, const Vec3& b) const;
};

/// Christoffel symbols at p from first derivatives of the metric.
template <typename T>
std::array<Mat3T<T>, 3> christoffel_components(const MetricModel& model, const Vec3T<T>& p) {
  // dg[k][i][j] = d_k g_ij
  std::array<Mat3T<T>, 3> dg;
  Mat3T<T> g;
  for (int k = 0; k < 3; ++k) {
    Vec3T<Dual<T>> q;
    for (int i = 0; i < 3; ++i) q[i] = Dual<T>(p[i], T(i == k ? 1.0 : 0.0));
    auto gq = model.metric(q);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        dg[k][i][j] = gq[i][j].eps;
        if (k == 0) g[i][j] = gq[i][j].re;
      }
  }
  Mat3T<T> g_inv = inverse3(g);
  std::array<Mat3T<T>, 3> gamma;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s(0.0);
        for (int l = 0; l < 3; ++l) s += g_inv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        gamma[k][i][j] = 0.5 * s;
      }
  return gamma;
}

Christoffels christoffels_at(const MetricModel& model, const ChartPoint& p);

/// Vector field usable with covariant_derivative_at: the callable maps
/// Vec3T<D1> chart coordinates to Vec3T<D1> coordinate components.
template <typename F>
concept VectorField = requires(const F& f, const Vec3T<D1>& q) {
  { f(q) } -> std::convertible_to<Vec3T<D1>>;
};

/// nabla_X Y at p, with X = direction and Y = field. The field is
/// differentiated exactly along X with one dual-number evaluation.
template <VectorField F>
TangentVector covariant_derivative_at(const MetricModel& model, const ChartPoint& p, const F& field,
                                      const TangentVector& direction) {
  model.require_valid(p);
  if (!(direction.base == p)) throw InvalidPoint("covariant_derivative_at: direction is not based at p");
  const Vec3& xv = direction.components;
  Vec3T<D1> q{D1(p.x, xv[0]), D1(p.y, xv[1]), D1(p.z, xv[2])};
  Vec3T<D1> y = field(q);
  Vec3 y0{y[0].re, y[1].re, y[2].re};
  Vec3 gam = christoffels_at(model, p).contract(xv, y0);
  TangentVector out{p, {}};
  for (int k = 0; k < 3; ++k) out.components[k] = y[k].eps + gam[k];
  return out;
}

/// The frame field E_index (index in 1..3) as a VectorField.
inline auto frame_field(const MetricModel& model, int index) {
  if (index < 1 || index > 3) throw InvalidArgument("frame index must be 1, 2 or 3");
  return [model, index](const auto& q) { return model.frame(q)[index - 1]; };
}

/// [E_i, E_j] at p from exact derivatives of the frame components.
TangentVector lie_bracket_frame_at(const MetricModel& model, const ChartPoint& p, int i, int j);

// ---------------------------------------------------------------------------
// Curvature

/// Rank-4 coordinate tensor, rm[a][b][c][d].
using Tensor4 = std::array<std::array<Mat3, 3>, 3>;

/// Curvature of the model at one point, evaluated once and queried many times.
struct CurvatureData {
  ChartPoint base;
  Mat3 g{};
  Mat3 g_inv{};
  Christoffels christoffels;
  /// curvature_up[l][k][i][j]: component l of R(d_i, d_j) d_k.
  Tensor4 curvature_up{};
  /// riemann_lower[a][b][c][d] = g(R(d_c, d_d) d_b, d_a).
  Tensor4 riemann_lower{};
  /// Ric_ij in coordinates.
  Mat3 ricci{};

  /// R(X,Y,Z,W) = g(R(Z,W)Y, X).
  double riemann(const Vec3& x, const Vec3& y, const Vec3& z, const Vec3& w) const;
  /// R(X,Y)Z.
  Vec3 curvature_operator(const Vec3& x, const Vec3& y, const Vec3& z) const;
  double ricci_form(const Vec3& x, const Vec3& y) const;
  /// Ricci operator: g(ricci_operator(Z), W) = Ric(Z, W).
  Vec3 ricci_operator(const Vec3& z) const;
};

CurvatureData curvature_at(const MetricModel& model, const ChartPoint& p);

double riemann_at(const MetricModel& model, const ChartPoint& p, const TangentVector& x, const TangentVector& y,
                  const TangentVector& z, const TangentVector& w);
double ricci_at(const MetricModel& model, const ChartPoint& p, const TangentVector& x, const TangentVector& y);
TangentVector ricci_operator_at(const MetricModel& model, const ChartPoint& p, const TangentVector& z);

}  // namespace biharm
