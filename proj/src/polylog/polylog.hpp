#pragma once

#include "exact/rational_function.hpp"
#include "numerics/budget.hpp"

namespace witten {

// x = e^{i theta} on the unit circle; theta is stored reduced to [0, 2 pi).
class UnitCirclePoint {
public:
    explicit UnitCirclePoint(double theta);
    double theta() const { return theta_; }
    // Same angle in (-pi, pi]; exact for inputs already in that range.
    double signed_theta() const { return signed_; }
    bool is_one() const { return theta_ == 0.0; }
    Complex point() const;
    // x^{-1}
    UnitCirclePoint inverse() const;

private:
    double theta_;
    double signed_;
};

// Z(s, x) = sum_{n >= 1} x^n n^{-s}: Re s > 1 for any x, or Re s > 0 for x != 1.
Estimate polylog_series(Complex s, UnitCirclePoint x, const PrecisionBudget& budget = {});

// Z(s, x) for any s, x != 1, through
//   (1 - x) Z(s, x) = x + x^2 (2^{-s} - 1) + x sum_{k >= 1} C(-s, k) (Z(s+k, x) - x).
Estimate polylog_continued(Complex s, UnitCirclePoint x, const PrecisionBudget& budget = {});

// Z(s, x) for real s from the Jonquiere relation at x and x^{-1} plus conjugation symmetry.
// Throws ConditioningError at positive integers s.
Estimate polylog_via_jonquiere(double s, UnitCirclePoint x, const PrecisionBudget& budget = {});

// Exact R_m(x) = Z(-m, x), cached.
RationalFunction polylog_closed_form(unsigned m);

// R_m at e^{i theta}, evaluated in the half-angle form num(x) x^{-(m+1)/2} / (2i sin(theta/2))^{m+1}
// so symmetric numerators give exactly real or imaginary results.
Complex polylog_eval_neg(unsigned m, UnitCirclePoint x);

}  // namespace witten
