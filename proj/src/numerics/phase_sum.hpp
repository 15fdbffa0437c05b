#pragma once

#include "numerics/budget.hpp"

namespace witten {

// e^{i theta} for theta given in radians, with long-double argument reduction.
Complex unit_point(long double theta);

// sum_{n >= first} e^{i n theta} n^{-s} for theta in (0, 2 pi), Re s > 0.
// Uses plain truncation with an Abel-summation tail bound when that is cheap, otherwise
// the partial sum to N-1 plus the tail x^N N^{-s} sum_j g_j C(-s, j) N^{-j}
// where g_j = sum_{k >= 0} x^k k^j (Abel sense).
Estimate phase_sum(Complex s, double theta, int first, const PrecisionBudget& budget);

}  // namespace witten
