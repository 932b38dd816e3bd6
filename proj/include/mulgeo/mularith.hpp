#pragma once

// The multiplicative scalar field R*. A multiplicative number is a positive
// real a stored by its logarithm ("logval"); under that chart every operation
// below is the corresponding classical operation on logvals. 0* = 1 (logval
// 0) and 1* = e (logval 1) are the additive and multiplicative identities.

#include <cmath>
#include <limits>
#include <string>

#include "mulgeo/error.hpp"

namespace mulgeo {

struct MulScalar {
  double logval = 0.0;

  static MulScalar from_logval(double lv) { return MulScalar{lv}; }
  static MulScalar from_value(double positive_real) {
    if (!(positive_real > 0.0) || !std::isfinite(positive_real))
      fail(ErrCode::domain, "multiplicative numbers are positive finite reals");
    return MulScalar{std::log(positive_real)};
  }
  double value() const { return std::exp(logval); }
};

inline MulScalar mzero() { return MulScalar{0.0}; }  // 0* = 1
inline MulScalar mone() { return MulScalar{1.0}; }   // 1* = e

inline MulScalar madd(MulScalar a, MulScalar b) {
  return MulScalar{a.logval + b.logval};
}
inline MulScalar msub(MulScalar a, MulScalar b) {
  return MulScalar{a.logval - b.logval};
}
inline MulScalar mneg(MulScalar a) { return MulScalar{-a.logval}; }
inline MulScalar mmul(MulScalar a, MulScalar b) {
  return MulScalar{a.logval * b.logval};
}
inline MulScalar mdiv(MulScalar a, MulScalar b) {
  if (b.logval == 0.0)
    fail(ErrCode::domain, "mdiv by multiplicative zero (b = 1)");
  return MulScalar{a.logval / b.logval};
}
inline MulScalar minv(MulScalar a) {
  if (a.logval == 0.0)
    fail(ErrCode::domain, "minv of multiplicative zero (a = 1)");
  return MulScalar{1.0 / a.logval};
}
inline MulScalar mabs(MulScalar a) { return MulScalar{std::fabs(a.logval)}; }

// a^{k*} = e^{(log a)^k}. Fractional k needs log a >= 0 to stay real.
inline MulScalar mpow(MulScalar a, double k) {
  if (k != std::floor(k) && a.logval < 0.0)
    fail(ErrCode::domain, "mpow with fractional exponent needs a >= 1");
  return MulScalar{std::pow(a.logval, k)};
}
inline MulScalar msqrt(MulScalar a) {
  if (a.logval < 0.0) fail(ErrCode::domain, "msqrt needs a >= 1");
  return MulScalar{std::sqrt(a.logval)};
}

inline MulScalar msin(MulScalar t) { return MulScalar{std::sin(t.logval)}; }
inline MulScalar mcos(MulScalar t) { return MulScalar{std::cos(t.logval)}; }
inline MulScalar mtan(MulScalar t) {
  if (std::cos(t.logval) == 0.0) fail(ErrCode::domain, "mtan at a pole");
  return MulScalar{std::tan(t.logval)};
}
inline MulScalar marccos(MulScalar a) {
  if (a.logval < -1.0 || a.logval > 1.0)
    fail(ErrCode::domain, "marccos needs log a in [-1, 1]");
  return MulScalar{std::acos(a.logval)};
}

inline int mcompare(MulScalar a, MulScalar b) {
  if (a.logval < b.logval) return -1;
  if (a.logval > b.logval) return 1;
  return 0;
}
// Multiplicative-positive means a > 0*, i.e. a > 1.
inline bool is_mpositive(MulScalar a) { return a.logval > 0.0; }

}  // namespace mulgeo
