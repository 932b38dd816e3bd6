#pragma once

// Classical-geometry referee. A multiplicative curve x(s) is mapped to its
// exact log image y(u) = logvec x(e^u) and every geometric quantity is
// recomputed there with textbook general-parametrization formulas:
//   t = y'/|y'|   b = y' x y''/|y' x y''|   n = b x t
//   kappa = |y' x y''| / |y'|^3   tau = <y' x y'', y'''> / |y' x y''|^2
// with d/ds = (1/|y'|) d/du for arc-length derivatives. Nothing above the
// jet layer is shared with the multiplicative pipeline, so agreement of the
// two routes is non-circular evidence for both.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mulgeo/curve.hpp"
#include "mulgeo/indicatrix.hpp"

namespace mulgeo {

struct ClassicalCurveView {
  std::shared_ptr<const LogCurve> y;  // exact log image (jet layer only)

  double u_lo() const { return y->u_lo(); }
  double u_hi() const { return y->u_hi(); }
  JetVec3 jets(double u) const { return y->jets(u); }
  Vec3 point(double u) const { return y->point(u); }
};

ClassicalCurveView to_log_chart(const MulCurve& c);

// Inverse of the chart: the multiplicative point at s.
MulVec3 lift(const ClassicalCurveView& v, MulScalar s);

struct ClassicalFrenet {
  Vec3 t{}, n{}, b{};
  double kappa = 0, tau = 0;
  double speed = 0;  // |y'(u)|
};
ClassicalFrenet classical_frenet(const ClassicalCurveView& v, double u);

// f, sigma, Gamma, psi computed classically (arc-length derivatives of the
// general-parametrization kappa, tau).
struct ClassicalChain {
  double f = 0, sigma = 0, gamma = 0, psi = 0;
};
ClassicalChain classical_chain(const ClassicalCurveView& v, double u);

// Frenet apparatus of the frame-vector curve u -> t(u) | n(u) | b(u),
// again by general-parametrization formulas.
struct ClassicalIndicatrix {
  Vec3 T{}, N{}, B{};
  double kappa = 0, tau = 0;
};
ClassicalIndicatrix classical_indicatrix(const ClassicalCurveView& v,
                                         IndicatrixKind kind, double u);

// Indicatrix arc length over [u0, u1]: integral of |x'(u)| for the tangent
// and normal indicatrices, of the signed tau |y'| for the binormal one
// (matching the multiplicative convention s_b = int tau du).
double classical_indicatrix_arc(const ClassicalCurveView& v,
                                IndicatrixKind kind, double u0, double u1);

struct CompareRow {
  double s = 0;  // parameter value (positive real)
  std::string quantity;
  double mult_logval = 0;
  double classical = 0;
  double absdiff = 0;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  // (s value, message) for samples where either pipeline failed
  std::vector<std::pair<double, std::string>> sample_errors;
  double max_absdiff = 0;
  double mean_absdiff = 0;
  std::string to_csv() const;  // columns: s,quantity,mult_logval,classical,absdiff
};

// Per-sample discrepancies for the frame, curvatures, helix chain, and
// indicatrix quantities. The curve must be naturally parametrized (the
// multiplicative pipeline requires it); the classical side deliberately
// ignores that and uses general-parametrization formulas throughout.
// Binormal-indicatrix frame/curvature rows are emitted only where
// f >= 0.05 (the closed forms divide by f and are contracted for f > 0*);
// the arc parameter s_b is always emitted.
CompareReport compare(const MulCurve& c, const std::vector<MulScalar>& grid);

}  // namespace mulgeo
