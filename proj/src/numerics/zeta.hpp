#pragma once

#include "numerics/budget.hpp"

namespace witten {

// Riemann zeta: Euler-Maclaurin for Re s >= 1/2, functional equation below.
// Throws PoleError at s = 1, ConvergenceError when the budget is exhausted.
Estimate riemann_zeta(Complex s, const PrecisionBudget& budget = {});

// Hurwitz zeta(s, a) for 0 < a <= 1: Euler-Maclaurin for Re s >= -2, Hurwitz's
// functional equation (periodic zeta on the unit circle) below.
Estimate hurwitz_zeta(Complex s, double a, const PrecisionBudget& budget = {});

}  // namespace witten
