#pragma once

#include "exact/big_rational.hpp"
#include "numerics/budget.hpp"

#include <vector>

namespace witten {

// Mellin-Barnes contour configuration: strip selector n, M = 2n + 2, contour at Re z = M - epsilon.
struct MBParams {
    int n = 1;
    double epsilon = 0.5;
    double height = 0.0;   // contour half-height T; 0 means 40 + 10 |Im s|
    int order = 16;        // Gauss-Legendre points per unit panel (doubled until stable)

    int M() const { return 2 * n + 2; }
    void validate() const;
    // Re s > -n - 1/2 + epsilon/2 and Re s < M + 1 - epsilon.
    bool admits(Complex s) const;
};

// 2^s sum_{m,n >= 1} (m n (m+n))^{-s}, Re s > 1.
Estimate mt_series(Complex s, const PrecisionBudget& budget = {});

// Raw square sum over m, n <= N, either over the full square or the symmetric triangle.
Complex mt_partial_sum(Complex s, int N, bool use_symmetry);

// zeta^W_{SU(3)}(s) by the Mellin-Barnes formula. Points within 1e-6 of the genuine poles
// 2/3, 1/2 - k raise PoleError; removable singular points of the explicit terms
// (integers, half-integer-free) are evaluated through the Cauchy integral on a small circle.
Estimate witten_su3_continued(Complex s, const MBParams& params = {}, const PrecisionBudget& budget = {});

// Constant Laurent coefficient at a genuine pole (or the value at a regular point).
Estimate witten_su3_finite_part(Complex s0, const MBParams& params = {}, const PrecisionBudget& budget = {});

// True when s0 is (within 1e-6) one of the genuine poles 2/3, 1/2 - k.
bool su3_is_pole(Complex s0);

struct SU3SpecialTerms {
    BigRational gamma_term;              // 2^{-n} (-1)^{n-1} n! n!/(2(2n+1)!) zeta(-3n-1)
    std::vector<BigRational> sum_terms;  // k = 0..2n
    BigRational limit_term;              // the k = 2n+1 limit
    BigRational total;
};

// Exact zeta^W_{SU(3)}(-n) from the Mellin-Barnes identity at s = -n.
BigRational special_value_su3(int n);
SU3SpecialTerms special_value_su3_terms(int n);

struct ConvolutionCheck {
    BigRational lhs;  // sum_{k+l=n} zeta(-n-k) zeta(-n-l)/(k! l!)
    BigRational rhs;  // n!/(2n+1)! zeta(-3n-1)
};
ConvolutionCheck bernoulli_convolution_check(int n);

}  // namespace witten
