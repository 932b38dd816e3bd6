#pragma once

// Named example curves. Printed examples whose source text is ambiguous or
// contains typos ship in two readings: `-literal` (exactly as printed) and
// `-corrected` (the reading that satisfies the example's stated property,
// documented per preset). Expression strings use the curve DSL.

#include <string>
#include <vector>

#include "mulgeo/curve.hpp"

namespace mulgeo {

struct Preset {
  std::string name;
  std::string x1, x2, x3;
  double s_lo, s_hi;  // domain endpoints, positive reals
  bool corrected;     // corrected reading of a printed example
  bool natural;       // multiplicative speed is 1* as authored
  std::string note;
};

std::vector<std::string> preset_names();
const Preset& preset_info(const std::string& name);
MulCurve preset(const std::string& name);

}  // namespace mulgeo
