#pragma once

#include <cmath>

namespace knot4 {

// Value and first three derivatives of a scalar function of u.
//
// Entries are derivatives, not Taylor coefficients: a product uses the
// Leibniz rule
//     (fg)''' = f'''g + 3f''g' + 3f'g'' + fg'''
// and a composition f(a(u)) uses Faa di Bruno truncated at order 3.
struct Jet1D {
  double d0 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;

  static constexpr Jet1D constant(double c) noexcept { return {c, 0.0, 0.0, 0.0}; }
  static constexpr Jet1D variable(double u) noexcept { return {u, 1.0, 0.0, 0.0}; }

  constexpr double operator[](int k) const noexcept {
    return k == 0 ? d0 : k == 1 ? d1 : k == 2 ? d2 : d3;
  }

  bool finite() const noexcept {
    return std::isfinite(d0) && std::isfinite(d1) && std::isfinite(d2) && std::isfinite(d3);
  }
};

constexpr Jet1D operator-(const Jet1D& a) noexcept { return {-a.d0, -a.d1, -a.d2, -a.d3}; }

constexpr Jet1D operator+(const Jet1D& a, const Jet1D& b) noexcept {
  return {a.d0 + b.d0, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

constexpr Jet1D operator-(const Jet1D& a, const Jet1D& b) noexcept {
  return {a.d0 - b.d0, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

constexpr Jet1D operator*(const Jet1D& a, const Jet1D& b) noexcept {
  return {a.d0 * b.d0,
          a.d1 * b.d0 + a.d0 * b.d1,
          a.d2 * b.d0 + 2.0 * a.d1 * b.d1 + a.d0 * b.d2,
          a.d3 * b.d0 + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.d0 * b.d3};
}

constexpr Jet1D operator*(double s, const Jet1D& a) noexcept { return {s * a.d0, s * a.d1, s * a.d2, s * a.d3}; }

// f(a(u)) given f and its first three derivatives evaluated at a.d0.
constexpr Jet1D compose(const Jet1D& a, double f0, double f1, double f2, double f3) noexcept {
  const double a1 = a.d1;
  const double a2 = a.d2;
  return {f0,
          f1 * a1,
          f2 * a1 * a1 + f1 * a2,
          f3 * a1 * a1 * a1 + 3.0 * f2 * a1 * a2 + f1 * a.d3};
}

// Callers check the denominator; a zero value propagates to infinities.
inline Jet1D reciprocal(const Jet1D& a) noexcept {
  const double r = 1.0 / a.d0;
  return compose(a, r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r);
}

inline Jet1D operator/(const Jet1D& a, const Jet1D& b) noexcept { return a * reciprocal(b); }

inline Jet1D sin(const Jet1D& a) noexcept {
  const double s = std::sin(a.d0), c = std::cos(a.d0);
  return compose(a, s, c, -s, -c);
}

inline Jet1D cos(const Jet1D& a) noexcept {
  const double s = std::sin(a.d0), c = std::cos(a.d0);
  return compose(a, c, -s, -c, s);
}

inline Jet1D tan(const Jet1D& a) noexcept {
  const double t = std::tan(a.d0);
  const double sec2 = 1.0 + t * t;
  return compose(a, t, sec2, 2.0 * t * sec2, sec2 * (2.0 + 6.0 * t * t));
}

inline Jet1D exp(const Jet1D& a) noexcept {
  const double e = std::exp(a.d0);
  return compose(a, e, e, e, e);
}

inline Jet1D log(const Jet1D& a) noexcept {
  const double r = 1.0 / a.d0;
  return compose(a, std::log(a.d0), r, -r * r, 2.0 * r * r * r);
}

inline Jet1D sqrt(const Jet1D& a) noexcept {
  const double s = std::sqrt(a.d0);
  const double r = 1.0 / a.d0;
  return compose(a, s, 0.5 / s, -0.25 * r / s, 0.375 * r * r / s);
}

inline Jet1D sinh(const Jet1D& a) noexcept {
  const double s = std::sinh(a.d0), c = std::cosh(a.d0);
  return compose(a, s, c, s, c);
}

inline Jet1D cosh(const Jet1D& a) noexcept {
  const double s = std::sinh(a.d0), c = std::cosh(a.d0);
  return compose(a, c, s, c, s);
}

inline Jet1D atan(const Jet1D& a) noexcept {
  const double x = a.d0;
  const double q = 1.0 / (1.0 + x * x);
  return compose(a, std::atan(x), q, -2.0 * x * q * q, (6.0 * x * x - 2.0) * q * q * q);
}

// a^p for a constant real exponent p. Falling-factorial coefficients that
// vanish (integer p below the derivative order) are kept exactly zero so that
// u^2 at u = 0 gives (0, 0, 2, 0) rather than NaN.
inline Jet1D pow(const Jet1D& a, double p) noexcept {
  double f[4];
  double coeff = 1.0;
  for (int k = 0; k < 4; ++k) {
    f[k] = coeff == 0.0 ? 0.0 : coeff * std::pow(a.d0, p - k);
    coeff *= (p - k);
  }
  return compose(a, f[0], f[1], f[2], f[3]);
}

}  // namespace knot4
