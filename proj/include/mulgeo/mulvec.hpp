#pragma once

// Multiplicative vectors in R*^3. logvec(u) = (log u1, log u2, log u3) is the
// faithful classical image; inner product, norm, cross product and angle are
// the classical ones applied to logvecs. Vec3/JetVec3 are the internal
// classical carriers shared by the geometry kernels.

#include <array>
#include <cmath>

#include "mulgeo/jet.hpp"
#include "mulgeo/mularith.hpp"

namespace mulgeo {

using Vec3 = std::array<double, 3>;
using JetVec3 = std::array<Jet, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}
inline Vec3 operator/(const Vec3& a, double s) { return (1.0 / s) * a; }
inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Jet-valued vector algebra (componentwise series).
inline JetVec3 operator+(const JetVec3& a, const JetVec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline JetVec3 operator-(const JetVec3& a, const JetVec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline JetVec3 operator-(const JetVec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Jet dot(const JetVec3& a, const JetVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline JetVec3 cross(const JetVec3& a, const JetVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

struct MulVec3 {
  std::array<MulScalar, 3> comp;

  static MulVec3 from_logvec(const Vec3& v) {
    return MulVec3{{MulScalar{v[0]}, MulScalar{v[1]}, MulScalar{v[2]}}};
  }
  Vec3 logvec() const {
    return {comp[0].logval, comp[1].logval, comp[2].logval};
  }
};

inline MulVec3 vadd(const MulVec3& u, const MulVec3& v) {
  return MulVec3::from_logvec(u.logvec() + v.logvec());
}
inline MulVec3 vsub(const MulVec3& u, const MulVec3& v) {
  return MulVec3::from_logvec(u.logvec() - v.logvec());
}
inline MulVec3 vneg(const MulVec3& u) {
  return MulVec3::from_logvec(-u.logvec());
}
// k .* u scales the logvec by log k.
inline MulVec3 smul(MulScalar k, const MulVec3& u) {
  return MulVec3::from_logvec(k.logval * u.logvec());
}
inline MulScalar minner(const MulVec3& u, const MulVec3& v) {
  return MulScalar{dot(u.logvec(), v.logvec())};
}
inline MulScalar mnorm(const MulVec3& u) {
  Vec3 lu = u.logvec();
  return MulScalar{std::sqrt(dot(lu, lu))};
}
inline MulVec3 mcross(const MulVec3& u, const MulVec3& v) {
  return MulVec3::from_logvec(cross(u.logvec(), v.logvec()));
}
inline bool is_morthogonal(const MulVec3& u, const MulVec3& v,
                           double tol = 1e-9) {
  return std::fabs(minner(u, v).logval) <= tol;
}

// Angle between multiplicative unit directions; inputs must have mnorm = 1*.
inline MulScalar mangle(const MulVec3& u, const MulVec3& v,
                        double unit_tol = 1e-9) {
  if (std::fabs(mnorm(u).logval - 1.0) > unit_tol ||
      std::fabs(mnorm(v).logval - 1.0) > unit_tol)
    fail(ErrCode::domain, "mangle needs multiplicative unit vectors");
  double d = dot(u.logvec(), v.logvec());
  if (d > 1.0) d = 1.0;
  if (d < -1.0) d = -1.0;
  return MulScalar{std::acos(d)};
}

}  // namespace mulgeo
