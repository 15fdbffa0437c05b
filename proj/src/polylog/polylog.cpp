#include "polylog/polylog.hpp"

#include "common/errors.hpp"
#include "numerics/gamma.hpp"
#include "numerics/phase_sum.hpp"
#include "numerics/zeta.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <vector>

namespace witten {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxShiftTerms = 256;

// Bound on |sum_{n >= 2} x^n n^{-sigma}| for sigma > 1.
double tail_d_bound(double sigma) {
    return std::pow(2.0, -sigma) * (1.0 + 2.0 / (sigma - 1.0));
}

}  // namespace

UnitCirclePoint::UnitCirclePoint(double theta) {
    if (!std::isfinite(theta)) throw DomainError("angle must be finite");
    signed_ = std::remainder(theta, kTwoPi);  // exact
    if (signed_ == -kPi) signed_ = kPi;
    double r = signed_ < 0.0 ? signed_ + kTwoPi : signed_;
    theta_ = r >= kTwoPi ? 0.0 : r;
}

Complex UnitCirclePoint::point() const { return unit_point(theta_); }

UnitCirclePoint UnitCirclePoint::inverse() const { return UnitCirclePoint(-signed_); }

Estimate polylog_series(Complex s, UnitCirclePoint x, const PrecisionBudget& budget) {
    if (x.is_one()) {
        if (!(s.real() > 1.0)) throw DomainError("polylog_series at x = 1 needs Re s > 1");
        return riemann_zeta(s, budget);
    }
    if (!(s.real() > 0.0)) throw DomainError("polylog_series needs Re s > 0 (use polylog_continued)");
    return phase_sum(s, x.theta(), 1, budget);
}

namespace {

// Z(s, e^{2 pi i a}) = Gamma(1-s) (2 pi)^{s-1} [e^{i pi (1-s)/2} zeta(1-s, a) + e^{-i pi (1-s)/2} zeta(1-s, 1-a)]
Estimate lerch_inversion(Complex s, UnitCirclePoint x, const PrecisionBudget& budget) {
    const double a = x.theta() / kTwoPi;
    const Complex w = 1.0 - s;
    const Estimate h1 = hurwitz_zeta(w, a, budget);
    const Estimate h2 = hurwitz_zeta(w, 1.0 - a, budget);
    const Complex pre = std::exp(log_gamma(w) - w * std::log(kTwoPi));
    const Complex c = cos_pi(0.5 * w);
    const Complex sn = sin_pi(0.5 * w);
    const Complex ep = c + Complex(0.0, 1.0) * sn;
    const Complex em = c - Complex(0.0, 1.0) * sn;
    const Complex value = pre * (ep * h1.value + em * h2.value);
    const double err =
        std::abs(pre) * (std::abs(ep) * h1.error + std::abs(em) * h2.error) + 1e-13 * std::abs(value);
    return {value, err};
}

Estimate shift_recursion(Complex s, UnitCirclePoint x, int levels, const PrecisionBudget& budget) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    PrecisionBudget inner = budget;
    inner.target = std::max(1e-15, 1e-3 * budget.target);
    const double sigma = s.real();
    const Complex xp = x.point();
    const Complex one_minus_x = 1.0 - xp;
    const double gap = std::abs(one_minus_x);
    const double tol = std::max(budget.target, 1e-9) * 0.01;

    // D(j) = Z(s + j, x) - x.
    std::vector<std::optional<Estimate>> d(levels + kMaxShiftTerms + 2);
    auto get_d = [&](int j) -> const Estimate& {
        auto& slot = d[j];
        if (!slot) slot = phase_sum(s + static_cast<double>(j), x.theta(), 2, inner);
        return *slot;
    };

    for (int j = levels - 1; j >= 0; --j) {
        const Complex sj = s + static_cast<double>(j);
        const Complex head = xp * xp * std::exp(-sj * std::log(2.0));
        Complex acc = 0.0;
        double err = 0.0;
        double mass = std::abs(head);
        Complex c = 1.0;  // C(-sj, k)
        bool converged = false;
        double tail = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= kMaxShiftTerms; ++k) {
            c *= (-sj - static_cast<double>(k - 1)) / static_cast<double>(k);
            const Estimate& dk = get_d(j + k);
            acc += c * dk.value;
            err += std::abs(c) * dk.error;
            mass += std::abs(c * dk.value);
            if (j + k < levels) continue;
            const double sig_next = sigma + j + k + 1;
            const Complex c_next = c * (-sj - static_cast<double>(k)) / static_cast<double>(k + 1);
            const double ratio = 0.5 * std::abs(-sj - static_cast<double>(k + 1)) / static_cast<double>(k + 2);
            if (ratio >= 1.0) continue;
            tail = std::abs(c_next) * tail_d_bound(sig_next) / (1.0 - std::max(ratio, 0.5));
            const double scale = std::max(std::abs(head + xp * acc), std::numeric_limits<double>::min());
            if (tail < tol * scale) {
                converged = true;
                break;
            }
        }
        const Complex value = (head + xp * acc) / one_minus_x;
        // Rounding in the shift sum is amplified by the cancellation mass.
        const double total_err = (err + tail + 8.0 * eps * mass) / gap + 4.0 * eps * std::abs(value);
        if (!converged)
            throw ConvergenceError("polylog_continued: shift series did not converge within 256 terms", value + xp,
                                   total_err);
        d[j] = Estimate{value, total_err};
    }
    return {d[0]->value + xp, d[0]->error};
}

}  // namespace

Estimate polylog_continued(Complex s, UnitCirclePoint x, const PrecisionBudget& budget) {
    budget.validate();
    if (x.is_one()) throw DomainError("polylog_continued needs x != 1");
    const double sigma = s.real();
    int levels = 0;
    if (sigma <= 1.0) levels = static_cast<int>(std::floor(1.0 - sigma)) + 1;
    else if (sigma <= 8.0) levels = 1;  // one recursion step keeps the path independent of the series
    if (levels == 0) return polylog_series(s, x, budget);

    const double goal = std::max(budget.target, 1e-9);
    std::optional<Estimate> rec;
    try {
        rec = shift_recursion(s, x, levels, budget);
        if (rec->error <= goal * std::abs(rec->value)) return *rec;
    } catch (const ConvergenceError&) {
        if (s.imag() == 0.0 && s.real() == std::nearbyint(s.real()) && s.real() >= 0.0) throw;
    }
    // Large |Im s| makes the shift sum cancel catastrophically in double precision;
    // use the Lerch inversion through Hurwitz zeta (singular only at integers s >= 0).
    if (s.imag() == 0.0 && s.real() == std::nearbyint(s.real()) && s.real() >= 0.0) {
        throw ConvergenceError("polylog_continued: precision goal not reached", rec->value, rec->error);
    }
    const Estimate inv = lerch_inversion(s, x, budget);
    if (rec && rec->error < inv.error) return *rec;
    return inv;
}

Estimate polylog_via_jonquiere(double s, UnitCirclePoint x, const PrecisionBudget& budget) {
    budget.validate();
    if (x.is_one()) throw DomainError("polylog_via_jonquiere needs x != 1");
    if (!std::isfinite(s)) throw DomainError("s must be finite");
    const double theta = x.theta();
    const double t = theta / kTwoPi;
    const bool integral = s == std::nearbyint(s);
    if (integral && s > 0.0)
        throw ConditioningError("Jonquiere solve is singular at positive integer s");
    if (s == 0.0) {
        // Z(0, x) = x/(1-x) = -1/2 + (i/2) cot(theta/2)
        return {{-0.5, 0.5 / std::tan(0.5 * theta)}, 1e-16};
    }
    if (integral) {
        // s = -m: 1/Gamma(s) ~ (-1)^m m! (s+m); take the limit of the 2x2 solve.
        const int m = static_cast<int>(-s);
        const Estimate h1 = hurwitz_zeta(1.0 + m, t, budget);
        const Estimate h2 = hurwitz_zeta(1.0 + m, 1.0 - t, budget);
        const double f = std::exp(-m * std::log(kTwoPi) + std::lgamma(m + 1.0)) * (m % 2 == 0 ? 1.0 : -1.0);
        if (m % 2 == 1) {
            const double den = 4.0 * (-0.5 * kPi) * sin_pi(-0.5 * m);
            const double a = f * (h1.value.real() + h2.value.real()) / den;
            return {{a, 0.0}, std::abs(f / den) * (h1.error + h2.error) + 1e-15 * std::abs(a)};
        }
        const double den = 4.0 * (0.5 * kPi) * cos_pi(0.5 * m);
        const double b = f * (h1.value.real() - h2.value.real()) / den;
        return {{0.0, b}, std::abs(f / den) * (h1.error + h2.error) + 1e-15 * std::abs(b)};
    }
    const double c = cos_pi(0.5 * s);
    const double sn = sin_pi(0.5 * s);
    if (std::abs(c * sn) < 1e-6) throw ConditioningError("Jonquiere solve ill-conditioned near an integer s");
    const Estimate h1 = hurwitz_zeta(1.0 - s, t, budget);
    const Estimate h2 = hurwitz_zeta(1.0 - s, 1.0 - t, budget);
    const double pre = (std::exp(s * std::log(kTwoPi)) * rgamma(Complex(s))).real();
    const double r1 = pre * h1.value.real();
    const double r2 = pre * h2.value.real();
    const double a = (r1 + r2) / (4.0 * c);
    const double b = (r1 - r2) / (4.0 * sn);
    const double err = std::abs(pre) * (h1.error + h2.error) * (1.0 / std::abs(4.0 * c) + 1.0 / std::abs(4.0 * sn)) +
                       1e-14 * std::hypot(a, b);
    return {{a, b}, err};
}

RationalFunction polylog_closed_form(unsigned m) {
    static std::mutex mutex;
    static std::vector<RationalFunction> cache;
    std::lock_guard<std::mutex> lock(mutex);
    const Polynomial x = Polynomial::identity("x");
    const Polynomial one = Polynomial::constant(BigRational(1), "x");
    while (cache.size() <= m) {
        const unsigned k_max = static_cast<unsigned>(cache.size());
        // (1-x) Z(-m) = x + x^2 (2^m - 1) + x sum_{k=1}^m C(m,k) (Z(-(m-k)) - x)
        RationalFunction rhs(x + (x * x).scaled(BigRational(2).pow(k_max) - BigRational(1)));
        RationalFunction sum("x");
        for (unsigned k = 1; k <= k_max; ++k)
            sum = sum + RationalFunction::constant(binomial(static_cast<long>(k_max), k), "x") *
                            (cache[k_max - k] - RationalFunction(x));
        rhs = rhs + RationalFunction(x) * sum;
        cache.push_back(rhs / RationalFunction(one - x));
    }
    return cache[m];
}

Complex polylog_eval_neg(unsigned m, UnitCirclePoint x) {
    if (x.is_one()) throw DomainError("polylog_eval_neg needs x != 1");
    const RationalFunction r = polylog_closed_form(m);
    const Polynomial expected_den =
        (Polynomial::identity("x") - Polynomial::constant(BigRational(1), "x")).pow(m + 1);
    if (!(r.den() == expected_den)) return r.eval(x.point());

    const double theta = x.signed_theta();
    const auto& c = r.num().coeffs();
    const int top = static_cast<int>(m) + 1;  // num degree <= m+1, centre (m+1)/2
    auto coeff = [&](int k) { return k < static_cast<int>(c.size()) ? c[k] : BigRational(); };
    bool palindromic = true, antipalindromic = true;
    for (int k = 0; k <= top; ++k) {
        if (!(coeff(k) == coeff(top - k))) palindromic = false;
        if (!(coeff(k) == -coeff(top - k))) antipalindromic = false;
    }
    double re = 0.0, im = 0.0;
    for (int k = 0; k <= top; ++k) {
        const double ck = coeff(k).to_double();
        if (ck == 0.0) continue;
        const double phase = (k - 0.5 * top) * theta;
        if (!antipalindromic) re += ck * std::cos(phase);
        if (!palindromic) im += ck * std::sin(phase);
    }
    // (2i sin(theta/2))^{m+1} = i^{m+1} (2 sin(theta/2))^{m+1}
    const double mag = std::pow(2.0 * std::sin(0.5 * theta), top);
    const Complex sum(re, im);
    Complex value;
    switch (top % 4) {
        case 0: value = sum / mag; break;
        case 1: value = Complex(sum.imag(), -sum.real()) / mag; break;   // / i
        case 2: value = -sum / mag; break;
        default: value = Complex(-sum.imag(), sum.real()) / mag; break;  // / (-i)
    }
    return value;
}

}  // namespace witten
