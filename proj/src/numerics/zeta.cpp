#include "numerics/zeta.hpp"

#include "common/errors.hpp"
#include "exact/bernoulli.hpp"
#include "numerics/gamma.hpp"
#include "numerics/phase_sum.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace witten {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxCorrections = 60;

// B_{2k} / (2k)!, k = 1..kMaxCorrections.
const std::array<double, kMaxCorrections>& em_coefficients() {
    static const std::array<double, kMaxCorrections> c = [] {
        std::array<double, kMaxCorrections> out{};
        for (int k = 1; k <= kMaxCorrections; ++k)
            out[k - 1] = (bernoulli(2 * k) / factorial(2 * k)).to_double();
        return out;
    }();
    return c;
}

Estimate hurwitz_em(Complex s, double a, const PrecisionBudget& budget) {
    const auto& coef = em_coefficients();
    const int min_corr = budget.correction_order / 2;
    long N = std::max(16L, static_cast<long>(std::ceil(std::abs(s))) + 8);
    Complex total = 0.0;
    double last = std::numeric_limits<double>::infinity();
    while (true) {
        Complex sum = 0.0;
        for (long n = N - 1; n >= 0; --n) sum += std::exp(-s * std::log(static_cast<double>(n) + a));
        const double w = static_cast<double>(N) + a;
        const Complex ws = std::exp(-s * std::log(w));
        total = sum + w * ws / (s - 1.0) + 0.5 * ws;
        Complex t = s * ws / w;
        const double w2 = w * w;
        double prev = std::numeric_limits<double>::infinity();
        bool converged = false;
        for (int k = 1; k <= kMaxCorrections; ++k) {
            const Complex term = coef[k - 1] * t;
            const double mag = std::abs(term);
            if (k > min_corr && mag > prev) break;
            total += term;
            last = mag;
            if (k >= min_corr && mag <= 0.1 * budget.target * std::max(std::abs(total), std::abs(ws))) {
                converged = true;
                break;
            }
            prev = mag;
            t *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k) / w2;
        }
        const double round = 1e-15 * std::abs(sum) + 1e-16 * std::abs(total);
        if (converged) return {total, last + round};
        N *= 2;
        if (N > budget.max_terms)
            throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin did not converge within the term budget", total,
                                   last);
    }
}

}  // namespace

Estimate riemann_zeta(Complex s, const PrecisionBudget& budget) {
    budget.validate();
    if (s == Complex(1.0, 0.0)) throw PoleError("riemann_zeta pole at s = 1", s);
    if (s.real() >= 0.5) return hurwitz_em(s, 1.0, budget);
    if (s == Complex(0.0)) return {-0.5, 0.0};  // removable 0 * pole in the reflection
    // zeta(s) = (2 pi)^s / pi * sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
    const Estimate reflected = hurwitz_em(1.0 - s, 1.0, budget);
    const Complex factor =
        std::exp(s * std::log(2.0 * kPi) - std::log(kPi) + log_gamma(1.0 - s)) * sin_pi(0.5 * s);
    const Complex value = factor * reflected.value;
    return {value, std::abs(factor) * reflected.error + 1e-13 * std::abs(value)};
}

Estimate hurwitz_zeta(Complex s, double a, const PrecisionBudget& budget) {
    budget.validate();
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta needs 0 < a <= 1");
    if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta pole at s = 1", s);
    if (a == 1.0) return riemann_zeta(s, budget);
    if (s.real() >= -2.0) return hurwitz_em(s, a, budget);
    // zeta(s, a) = Gamma(w)/(2 pi)^w [e^{-i pi w/2} F(a, w) + e^{i pi w/2} F(-a, w)],  w = 1 - s
    const Complex w = 1.0 - s;
    const Estimate f1 = phase_sum(w, 2.0 * kPi * a, 1, budget);
    const Estimate f2 = phase_sum(w, 2.0 * kPi * (1.0 - a), 1, budget);
    const Complex pre = std::exp(log_gamma(w) - w * std::log(2.0 * kPi));
    const Complex c = cos_pi(0.5 * w);
    const Complex sn = sin_pi(0.5 * w);
    const Complex em = c - Complex(0.0, 1.0) * sn;  // e^{-i pi w/2}
    const Complex ep = c + Complex(0.0, 1.0) * sn;  // e^{+i pi w/2}
    const Complex value = pre * (em * f1.value + ep * f2.value);
    const double err = std::abs(pre) * (std::abs(em) * f1.error + std::abs(ep) * f2.error) + 1e-13 * std::abs(value);
    return {value, err};
}

}  // namespace witten
