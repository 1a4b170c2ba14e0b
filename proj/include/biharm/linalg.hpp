#pragma once

// Fixed-size vector/matrix helpers. Templated on the scalar so the same code
// runs on doubles and on dual numbers.

#include <array>
#include <cmath>
#include <cstddef>

namespace biharm {

template <typename T>
using Vec3T = std::array<T, 3>;
template <typename T>
using Mat3T = std::array<std::array<T, 3>, 3>;

using Vec3 = Vec3T<double>;
using Mat3 = Mat3T<double>;
using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

template <typename T>
T det3(const Mat3T<T>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// Inverse via the adjugate; the caller guarantees a is nonsingular.
template <typename T>
Mat3T<T> inverse3(const Mat3T<T>& a) {
  T inv_det = T(1.0) / det3(a);
  Mat3T<T> r;
  r[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) * inv_det;
  r[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) * inv_det;
  r[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) * inv_det;
  r[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) * inv_det;
  r[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) * inv_det;
  r[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) * inv_det;
  r[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) * inv_det;
  r[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) * inv_det;
  r[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) * inv_det;
  return r;
}

template <typename T>
Vec3T<T> mat_vec(const Mat3T<T>& a, const Vec3T<T>& v) {
  Vec3T<T> r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return r;
}

/// g(a, b) for a symmetric bilinear form g given by components.
template <typename T>
T inner(const Mat3T<T>& g, const Vec3T<T>& a, const Vec3T<T>& b) {
  T s(0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += g[i][j] * a[i] * b[j];
  return s;
}

/// Euclidean cross product; as a covector it annihilates both inputs.
template <typename T>
Vec3T<T> cross(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <typename T>
Vec3T<T> operator+(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
template <typename T>
Vec3T<T> operator-(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
template <typename T>
Vec3T<T> operator*(const T& s, const Vec3T<T>& a) {
  return {s * a[0], s * a[1], s * a[2]};
}
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline double euclidean_norm(const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

inline double det2(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

inline Mat2 inverse2(const Mat2& a) {
  double d = det2(a);
  return {{{a[1][1] / d, -a[0][1] / d}, {-a[1][0] / d, a[0][0] / d}}};
}

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

inline Vec2 mat_vec(const Mat2& a, const Vec2& v) {
  return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
}

}  // namespace biharm
