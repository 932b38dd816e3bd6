#pragma once

// Adaptive Simpson quadrature with Richardson correction. Integrands here
// are smooth log-chart images, so plain Simpson refinement converges fast;
// depth overrun means the request itself is ill-posed and raises an error.

#include <cmath>
#include <functional>

#include "mulgeo/error.hpp"

namespace mulgeo {

namespace detail {
inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb, double S,
                          double tol, int depth, int max_depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double h = b - a;
  double Sl = (h / 12.0) * (fa + 4.0 * flm + fm);
  double Sr = (h / 12.0) * (fm + 4.0 * frm + fb);
  double S2 = Sl + Sr;
  if (std::fabs(S2 - S) <= 15.0 * tol || h <= 1e-14 * (1.0 + std::fabs(a)))
    return S2 + (S2 - S) / 15.0;
  if (depth >= max_depth)
    fail(ErrCode::numeric, "adaptive quadrature failed to converge");
  return simpson_rec(f, a, m, fa, flm, fm, Sl, 0.5 * tol, depth + 1,
                     max_depth) +
         simpson_rec(f, m, b, fm, frm, fb, Sr, 0.5 * tol, depth + 1,
                     max_depth);
}
}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-10,
                               int max_depth = 40) {
  if (a == b) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double S = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, b, fa, fm, fb, S, tol, 0, max_depth);
}

}  // namespace mulgeo
