#pragma once

#include <complex>

namespace witten {

using Complex = std::complex<double>;

struct PrecisionBudget {
    double target = 1e-10;      // relative error goal
    int max_terms = 10000;      // cap on explicit series terms
    int correction_order = 8;   // minimum Euler-Maclaurin correction order (even)

    // Throws DomainError unless target > 0, max_terms >= 16, order even and >= 2.
    void validate() const;
};

// A value with its estimated absolute error.
struct Estimate {
    Complex value;
    double error = 0.0;
};

}  // namespace witten
