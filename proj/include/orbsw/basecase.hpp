#ifndef ORBSW_BASECASE_HPP
#define ORBSW_BASECASE_HPP

#include "orbsw/numeric.hpp"

namespace orbsw {

// Seiberg-Witten invariant of the product circle bundle over a genus-g
// surface, attached to a line bundle of background degree d:
//   g >= 1, 0 <= d <= 2g-2  ->  (-1)^d * C(2g-2, d)
//   g == 0, d >= 0          ->  d + 1
//   otherwise               ->  0
// For g >= 1 these are exactly the coefficients of (t^-1 - t)^(2g-2)
// at exponent 2d - (2g-2).
BigInt sw_base(Int genus, Int d);

} // namespace orbsw

#endif
