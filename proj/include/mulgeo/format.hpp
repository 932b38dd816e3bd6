#pragma once

// One formatting routine for every float the library prints. %.15g is
// deterministic and renders dyadic-friendly constants (0.6, 1.25) cleanly;
// byte-identical output across runs relies on everyone using this.

#include <cstdio>
#include <string>

namespace mulgeo {

inline std::string fmt_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

// Renders a multiplicative scalar in the e^r notation, r = logval.
inline std::string fmt_mul(double logval) { return "e^" + fmt_real(logval); }

}  // namespace mulgeo
