#pragma once

#include "dicke/rational.hpp"

namespace dicke {

/// C(n, r) as an exact big integer. Out-of-range r (r < 0 or r > n) yields 0,
/// so spectrum coefficient formulas vanish outside their support without
/// special-casing. Negative n throws std::invalid_argument.
BigInt binomial(int n, int r);

}  // namespace dicke
