#pragma once

#include <cmath>

#include "cutshell/types.hpp"

namespace cutshell {

/// Second-order forward-mode jet in two variables: carries a value together
/// with its exact gradient and Hessian. Used to evaluate closed-form spatial
/// profiles and their derivatives without hand-written calculus.
struct Jet2 {
  double v = 0.0;
  Vec2 g = Vec2::Zero();
  Mat2 h = Mat2::Zero();

  Jet2() = default;
  explicit Jet2(double value) : v(value) {}

  static Jet2 variable(double value, int index) {
    Jet2 j(value);
    j.g[index] = 1.0;
    return j;
  }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v + b.v;
  r.g = a.g + b.g;
  r.h = a.h + b.h;
  return r;
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v - b.v;
  r.g = a.g - b.g;
  r.h = a.h - b.h;
  return r;
}
inline Jet2 operator-(const Jet2& a) {
  Jet2 r;
  r.v = -a.v;
  r.g = -a.g;
  r.h = -a.h;
  return r;
}
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v * b.v;
  r.g = a.v * b.g + b.v * a.g;
  r.h = a.v * b.h + b.v * a.h + a.g * b.g.transpose() + b.g * a.g.transpose();
  return r;
}
inline Jet2 operator+(const Jet2& a, double c) { return a + Jet2(c); }
inline Jet2 operator+(double c, const Jet2& a) { return a + Jet2(c); }
inline Jet2 operator-(const Jet2& a, double c) { return a - Jet2(c); }
inline Jet2 operator-(double c, const Jet2& a) { return Jet2(c) - a; }
inline Jet2 operator*(const Jet2& a, double c) {
  Jet2 r;
  r.v = a.v * c;
  r.g = a.g * c;
  r.h = a.h * c;
  return r;
}
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }

/// Composition with a scalar function f given f(v), f'(v), f''(v).
inline Jet2 compose(const Jet2& a, double f, double df, double ddf) {
  Jet2 r;
  r.v = f;
  r.g = df * a.g;
  r.h = df * a.h + ddf * a.g * a.g.transpose();
  return r;
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  double inv = 1.0 / b.v;
  return a * compose(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}
inline Jet2 operator/(double c, const Jet2& b) { return Jet2(c) / b; }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }

inline Jet2 exp(const Jet2& a) {
  double e = std::exp(a.v);
  return compose(a, e, e, e);
}
inline Jet2 sin(const Jet2& a) {
  return compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v));
}
inline Jet2 cos(const Jet2& a) {
  return compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v));
}
inline Jet2 sqrt(const Jet2& a) {
  double s = std::sqrt(a.v);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}

/// Real power for strictly positive base.
inline Jet2 pow(const Jet2& a, double c) {
  double p = std::pow(a.v, c);
  return compose(a, p, c * p / a.v, c * (c - 1.0) * p / (a.v * a.v));
}

/// Integer power valid for any sign of the base.
inline Jet2 ipow(const Jet2& a, int n) {
  Jet2 r(1.0);
  for (int k = 0; k < n; ++k) r = r * a;
  return r;
}

}  // namespace cutshell
