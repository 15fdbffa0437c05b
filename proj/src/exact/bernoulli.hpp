#pragma once

#include "exact/big_rational.hpp"

namespace witten {

// B_k with B_1 = -1/2, by the recurrence sum_{j<=k} C(k+1, j) B_j = 0. Memoized, thread-safe.
BigRational bernoulli(unsigned k);

// zeta(-k): -1/2 at k = 0, otherwise -B_{k+1}/(k+1).
BigRational zeta_neg_int(unsigned k);

}  // namespace witten
