#pragma once

// Forward-mode dual numbers. Nesting (Dual<Dual<double>>) yields exact
// second derivatives; every metric, frame and immersion in the library is
// written as a template over the scalar type so it can be evaluated with
// double, D1, D2 or D3.

#include <cmath>
#include <type_traits>

namespace biharm {

template <typename T>
struct Dual {
  T re{};
  T eps{};

  constexpr Dual() = default;
  constexpr Dual(double value) : re(value), eps(0.0) {}  // NOLINT(implicit)
  constexpr Dual(const T& value)  // NOLINT(implicit)
    requires(!std::is_same_v<T, double>)
      : re(value), eps(0.0) {}
  constexpr Dual(T value, T derivative) : re(value), eps(derivative) {}

  Dual& operator+=(const Dual& o) { re += o.re; eps += o.eps; return *this; }
  Dual& operator-=(const Dual& o) { re -= o.re; eps -= o.eps; return *this; }
  Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
  Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.re + b.re, a.eps + b.eps}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.re - b.re, a.eps - b.eps}; }
  friend Dual operator-(const Dual& a) { return {-a.re, -a.eps}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.re * b.re, a.re * b.eps + a.eps * b.re};
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    T inv = T(1.0) / b.re;
    T q = a.re * inv;
    return {q, (a.eps - q * b.eps) * inv};
  }
  friend Dual operator+(const Dual& a, double b) { return {a.re + b, a.eps}; }
  friend Dual operator+(double a, const Dual& b) { return {a + b.re, b.eps}; }
  friend Dual operator-(const Dual& a, double b) { return {a.re - b, a.eps}; }
  friend Dual operator-(double a, const Dual& b) { return {a - b.re, -b.eps}; }
  friend Dual operator*(const Dual& a, double b) { return {a.re * b, a.eps * b}; }
  friend Dual operator*(double a, const Dual& b) { return {a * b.re, a * b.eps}; }
  friend Dual operator/(const Dual& a, double b) { return {a.re / b, a.eps / b}; }
  friend Dual operator/(double a, const Dual& b) { return Dual(a) / b; }
};

using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;

template <typename T>
struct is_dual : std::false_type {};
template <typename T>
struct is_dual<Dual<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_dual_v = is_dual<T>::value;

template <typename T>
concept Scalar = std::is_same_v<T, double> || is_dual_v<T>;

/// Innermost real value of a (possibly nested) dual number.
inline double value_of(double x) { return x; }
template <typename T>
double value_of(const Dual<T>& x) {
  return value_of(x.re);
}

/// Derivative part of a dual number, one nesting level down.
template <typename T>
const T& tangent_of(const Dual<T>& x) {
  return x.eps;
}

template <typename T>
Dual<T> sqrt(const Dual<T>& x) {
  using std::sqrt;
  T r = sqrt(x.re);
  return {r, x.eps / (2.0 * r)};
}

template <typename T>
Dual<T> exp(const Dual<T>& x) {
  using std::exp;
  T e = exp(x.re);
  return {e, e * x.eps};
}

template <typename T>
Dual<T> log(const Dual<T>& x) {
  using std::log;
  return {log(x.re), x.eps / x.re};
}

template <typename T>
Dual<T> sin(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {sin(x.re), cos(x.re) * x.eps};
}

template <typename T>
Dual<T> cos(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {cos(x.re), -(sin(x.re) * x.eps)};
}

template <typename T>
Dual<T> tan(const Dual<T>& x) {
  using std::tan;
  T t = tan(x.re);
  return {t, (1.0 + t * t) * x.eps};
}

template <typename T>
Dual<T> tanh(const Dual<T>& x) {
  using std::tanh;
  T t = tanh(x.re);
  return {t, (1.0 - t * t) * x.eps};
}

template <typename T>
Dual<T> atan(const Dual<T>& x) {
  using std::atan;
  return {atan(x.re), x.eps / (1.0 + x.re * x.re)};
}

template <typename T>
Dual<T> atanh(const Dual<T>& x) {
  using std::atanh;
  return {atanh(x.re), x.eps / (1.0 - x.re * x.re)};
}

/// Seed a variable: value x, unit derivative.
template <typename T>
Dual<T> variable(const T& x) {
  return {x, T(1.0)};
}

}  // namespace biharm
