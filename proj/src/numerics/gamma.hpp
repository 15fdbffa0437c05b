#pragma once

#include "exact/big_rational.hpp"
#include "numerics/budget.hpp"

namespace witten {

// sin(pi z), cos(pi z) with exact reduction of Re z (exact zeros at integers).
double sin_pi(double x);
double cos_pi(double x);
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// Principal branch of log Gamma (same branch as the usual loggamma).
// Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

// Gamma(z); zero-free, throws PoleError at non-positive integers.
Complex gamma(Complex z);

// 1/Gamma(z), entire: zero at non-positive integers.
Complex rgamma(Complex z);

// lim_{s -> -n} Gamma(2s-1)/Gamma(s), exact, n >= 1.
BigRational gamma_ratio_at_neg(int n);

}  // namespace witten
