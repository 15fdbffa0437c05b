#include "numerics/budget.hpp"

#include "common/errors.hpp"

#include <cmath>

namespace witten {

void PrecisionBudget::validate() const {
    if (!(target > 0.0) || !std::isfinite(target)) throw DomainError("budget target must be positive");
    if (max_terms < 16) throw DomainError("budget max_terms must be at least 16");
    if (correction_order < 2 || correction_order % 2 != 0)
        throw DomainError("budget correction order must be even and at least 2");
}

}  // namespace witten
