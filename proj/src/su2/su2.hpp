#pragma once

#include "exact/big_rational.hpp"
#include "numerics/budget.hpp"

#include <string>
#include <vector>

namespace witten {

// Conjugacy class of diag(e^{i theta}, e^{-i theta}) in SU(2), 0 <= theta <= pi.
class ConjugacyClassSU2 {
public:
    explicit ConjugacyClassSU2(double theta);
    double theta() const { return theta_; }
    bool is_identity() const { return theta_ == 0.0; }
    bool is_minus_identity() const;
    bool is_regular() const { return !is_identity() && !is_minus_identity(); }

private:
    double theta_;
};

// chi_n(g)/n = sin(n theta)/(n sin theta), with limits 1 (theta = 0) and (-1)^{n-1} (theta = pi).
double char_ratio(int n, const ConjugacyClassSU2& g);

// sum_n chi_n(g)/n n^{-s}, continued to all s. Throws PoleError at s = 1 for g = I.
Estimate witten_L_su2(Complex s, const ConjugacyClassSU2& g, const PrecisionBudget& budget = {});

struct SpecialValueZero {
    BigRational value;          // always 0
    std::string justification;  // which identity gives the zero
};

// zeta^W(-m, g) = 0 for even m >= 2.
SpecialValueZero special_value_neg_even(int m, const ConjugacyClassSU2& g);
// |witten_L_su2(-m, g)| on the floating path.
double special_value_float_check(int m, const ConjugacyClassSU2& g, const PrecisionBudget& budget = {});

// d/ds zeta^W(s, g) at s = -2.
Estimate derivative_at_minus2(const ConjugacyClassSU2& g, const PrecisionBudget& budget = {});

// sum_n prod_i (chi_n(g_i)/n) n^{-s} for 2 or 3 classes.
Estimate multi_L(Complex s, const std::vector<ConjugacyClassSU2>& gs, const PrecisionBudget& budget = {});

// int_0^pi zeta^W(s, theta) (2/pi) sin^2 theta d theta.
Estimate haar_average_su2(double s, const PrecisionBudget& budget = {});

}  // namespace witten
