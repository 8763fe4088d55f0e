#pragma once

#include "qvertex/laurent_fraction.hpp"

namespace qvertex::testing {

inline LaurentPoly tpow(int e, const Rat& c = 1) { return LaurentPoly::var_power(var::t, e, c); }
inline LaurentPoly spow(int e, const Rat& c = 1) { return LaurentPoly::var_power(var::s, e, c); }
inline LaurentFraction frac(const LaurentPoly& n, const LaurentPoly& d) { return {n, d}; }
// t - t^-1
inline LaurentPoly bracket1() { return tpow(1) - tpow(-1); }

}  // namespace qvertex::testing
