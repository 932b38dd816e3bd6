#pragma once

// Truncated Taylor series ("jets") in one variable, order 6. Coefficients are
// Taylor coefficients c[k] = f^(k)/k!, not raw derivatives. Order 6 is the
// exact depth the geometry needs: psi sits six log-derivatives above curve
// components. The derivative shift zero-fills the top coefficient; every
// consumer stays inside its order budget so the fill is never read.

#include <array>
#include <cmath>

#include "mulgeo/error.hpp"

namespace mulgeo {

struct Jet {
  static constexpr int kOrder = 6;
  std::array<double, kOrder + 1> c{};

  static Jet constant(double x) {
    Jet j;
    j.c[0] = x;
    return j;
  }
  // The identity series u0 + (u - u0).
  static Jet variable(double u0) {
    Jet j;
    j.c[0] = u0;
    j.c[1] = 1.0;
    return j;
  }

  double value() const { return c[0]; }
  // k-th derivative, k! * c[k].
  double deriv(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return c[k] * f;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}
inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}
inline Jet operator-(const Jet& a) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.c[k] = -a.c[k];
  return r;
}
inline Jet operator*(const Jet& a, double s) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.c[k] = a.c[k] * s;
  return r;
}
inline Jet operator*(double s, const Jet& a) { return a * s; }
inline Jet operator+(const Jet& a, double s) {
  Jet r = a;
  r.c[0] += s;
  return r;
}
inline Jet operator+(double s, const Jet& a) { return a + s; }
inline Jet operator-(const Jet& a, double s) { return a + (-s); }
inline Jet operator-(double s, const Jet& a) { return (-a) + s; }

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += a.c[j] * b.c[k - j];
    r.c[k] = acc;
  }
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) {
  if (b.c[0] == 0.0)
    fail(ErrCode::domain, "jet division by series with zero constant term");
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) {
    double acc = a.c[k];
    for (int j = 1; j <= k; ++j) acc -= b.c[j] * r.c[k - j];
    r.c[k] = acc / b.c[0];
  }
  return r;
}
inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
inline Jet operator/(double s, const Jet& a) {
  return Jet::constant(s) / a;
}

inline Jet jet_exp(const Jet& a) {
  Jet r;
  r.c[0] = std::exp(a.c[0]);
  for (int k = 1; k <= Jet::kOrder; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * a.c[j] * r.c[k - j];
    r.c[k] = acc / k;
  }
  return r;
}

inline Jet jet_log(const Jet& a) {
  if (a.c[0] <= 0.0)
    fail(ErrCode::domain, "jet log of non-positive value");
  Jet r;
  r.c[0] = std::log(a.c[0]);
  for (int k = 1; k <= Jet::kOrder; ++k) {
    double acc = a.c[k];
    for (int j = 1; j < k; ++j) acc -= (static_cast<double>(j) / k) * r.c[j] * a.c[k - j];
    r.c[k] = acc / a.c[0];
  }
  return r;
}

inline void jet_sincos(const Jet& a, Jet& s, Jet& c) {
  s.c[0] = std::sin(a.c[0]);
  c.c[0] = std::cos(a.c[0]);
  for (int k = 1; k <= Jet::kOrder; ++k) {
    double sa = 0.0, ca = 0.0;
    for (int j = 1; j <= k; ++j) {
      sa += j * a.c[j] * c.c[k - j];
      ca += j * a.c[j] * s.c[k - j];
    }
    s.c[k] = sa / k;
    c.c[k] = -ca / k;
  }
}
inline Jet jet_sin(const Jet& a) {
  Jet s, c;
  jet_sincos(a, s, c);
  return s;
}
inline Jet jet_cos(const Jet& a) {
  Jet s, c;
  jet_sincos(a, s, c);
  return c;
}
inline Jet jet_tan(const Jet& a) {
  Jet s, c;
  jet_sincos(a, s, c);
  if (c.c[0] == 0.0) fail(ErrCode::domain, "jet tan at a pole");
  return s / c;
}

inline Jet jet_sqrt(const Jet& a) {
  if (a.c[0] <= 0.0)
    fail(ErrCode::domain, "jet sqrt of non-positive value");
  Jet r;
  r.c[0] = std::sqrt(a.c[0]);
  for (int k = 1; k <= Jet::kOrder; ++k) {
    double acc = a.c[k];
    for (int j = 1; j < k; ++j) acc -= r.c[j] * r.c[k - j];
    r.c[k] = acc / (2.0 * r.c[0]);
  }
  return r;
}

// Integer power by binary exponentiation; valid for any constant term.
inline Jet jet_ipow(const Jet& a, long n) {
  if (n < 0) return 1.0 / jet_ipow(a, -n);
  Jet r = Jet::constant(1.0);
  Jet base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

// Real power. Integer exponents work for any base; fractional exponents need
// a positive constant term.
inline Jet jet_pow(const Jet& a, double p) {
  if (p == std::floor(p) && std::abs(p) <= 64.0)
    return jet_ipow(a, static_cast<long>(p));
  if (a.c[0] <= 0.0)
    fail(ErrCode::domain, "jet fractional power of non-positive base");
  return jet_exp(p * jet_log(a));
}

// Series of f'; the top coefficient is zero-filled (one order is lost).
inline Jet jet_derivative(const Jet& a) {
  Jet r;
  for (int k = 0; k < Jet::kOrder; ++k) r.c[k] = (k + 1) * a.c[k + 1];
  r.c[Jet::kOrder] = 0.0;
  return r;
}

// f(g(eps)) for inner series with zero constant term, by Horner.
inline Jet jet_compose(const Jet& f, const Jet& g) {
  if (g.c[0] != 0.0)
    fail(ErrCode::invalid, "jet_compose requires zero inner constant term");
  Jet r = Jet::constant(f.c[Jet::kOrder]);
  for (int k = Jet::kOrder - 1; k >= 0; --k) r = r * g + f.c[k];
  return r;
}

// Compositional inverse of a series with a_0 = 0, a_1 != 0: returns b with
// a(b(eps)) = eps. Triangular solve, one coefficient per pass.
inline Jet jet_revert(const Jet& a) {
  if (a.c[0] != 0.0 || a.c[1] == 0.0)
    fail(ErrCode::invalid, "jet_revert requires a0 = 0 and a1 != 0");
  Jet b{};
  b.c[1] = 1.0 / a.c[1];
  for (int k = 2; k <= Jet::kOrder; ++k) {
    Jet comp = jet_compose(a, b);
    b.c[k] = -comp.c[k] / a.c[1];
  }
  return b;
}

}  // namespace mulgeo
