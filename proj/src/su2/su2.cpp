#include "su2/su2.hpp"

#include "common/errors.hpp"
#include "numerics/quadrature.hpp"
#include "numerics/zeta.hpp"
#include "polylog/polylog.hpp"

#include <cmath>
#include <numbers>

namespace witten {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Product angles this close to 0 mod 2 pi are treated as x = 1 (they arise as
// theta1 - theta2 of equal inputs, or 3 * (2 pi / 3) rounded).
constexpr double kAngleSnap = 1e-12;

bool is_real(Complex s) { return s.imag() == 0.0; }

// Z(s, e^{i phi}) with phi = 0 mod 2 pi mapped to zeta(s).
Estimate polylog_at(Complex s, double phi, const PrecisionBudget& budget) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r < kAngleSnap || kTwoPi - r < kAngleSnap) return riemann_zeta(s, budget);
    return polylog_continued(s, UnitCirclePoint(r), budget);
}

}  // namespace

ConjugacyClassSU2::ConjugacyClassSU2(double theta) : theta_(theta) {
    if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("SU(2) class angle must lie in [0, pi]");
}

bool ConjugacyClassSU2::is_minus_identity() const { return theta_ == kPi; }

double char_ratio(int n, const ConjugacyClassSU2& g) {
    if (n < 1) throw DomainError("char_ratio needs n >= 1");
    if (g.is_identity()) return 1.0;
    if (g.is_minus_identity()) return n % 2 == 1 ? 1.0 : -1.0;
    return std::sin(n * g.theta()) / (n * std::sin(g.theta()));
}

Estimate witten_L_su2(Complex s, const ConjugacyClassSU2& g, const PrecisionBudget& budget) {
    if (g.is_identity()) {
        if (s == Complex(1.0)) throw PoleError("zeta^W(s, I) has a pole at s = 1", s);
        return riemann_zeta(s, budget);
    }
    if (g.is_minus_identity()) {
        // (1 - 2^{1-s}) zeta(s): the alternating series, log 2 at s = 1.
        if (s == Complex(1.0)) return {std::log(2.0), 1e-16};
        const Estimate z = riemann_zeta(s, budget);
        const Complex f = 1.0 - std::exp((1.0 - s) * std::log(2.0));
        return {f * z.value, std::abs(f) * z.error};
    }
    const double theta = g.theta();
    const double sn = std::sin(theta);
    const Complex s1 = s + 1.0;
    if (is_real(s)) {
        // Z(s+1, x^{-1}) = conj Z(s+1, x) for real s.
        const Estimate z = polylog_continued(s1, UnitCirclePoint(theta), budget);
        return {z.value.imag() / sn, z.error / sn};
    }
    const Estimate zp = polylog_continued(s1, UnitCirclePoint(theta), budget);
    const Estimate zm = polylog_continued(s1, UnitCirclePoint(-theta), budget);
    const Complex value = (zp.value - zm.value) / Complex(0.0, 2.0 * sn);
    return {value, (zp.error + zm.error) / (2.0 * sn)};
}

SpecialValueZero special_value_neg_even(int m, const ConjugacyClassSU2& g) {
    if (m < 2 || m % 2 != 0) throw DomainError("special_value_neg_even needs even m >= 2");
    if (g.is_identity()) return {BigRational(0), "zeta(-m) = 0 (trivial zero)"};
    if (g.is_minus_identity()) return {BigRational(0), "(1 - 2^{1+m}) zeta(-m) with zeta(-m) = 0"};
    return {BigRational(0), "Z(1-m, x) = Z(1-m, x^{-1}) since 1-m is odd, so the difference vanishes"};
}

double special_value_float_check(int m, const ConjugacyClassSU2& g, const PrecisionBudget& budget) {
    return std::abs(witten_L_su2(Complex(-m), g, budget).value);
}

Estimate derivative_at_minus2(const ConjugacyClassSU2& g, const PrecisionBudget& budget) {
    const Estimate z3 = riemann_zeta(3.0, budget);
    const double pi2 = kPi * kPi;
    if (g.is_identity()) return {-z3.value.real() / (4.0 * pi2), z3.error / (4.0 * pi2)};
    if (g.is_minus_identity()) return {7.0 * z3.value.real() / (4.0 * pi2), 7.0 * z3.error / (4.0 * pi2)};
    const double theta = g.theta();
    const Estimate h = hurwitz_zeta(2.0, theta / kTwoPi, budget);
    const double half = std::sin(0.5 * theta);
    const double pre = 1.0 / (4.0 * kPi * std::sin(theta));
    const double value = pre * (h.value.real() - pi2 / (2.0 * half * half));
    return {value, pre * h.error + 1e-15 * std::abs(pre * h.value.real())};
}

Estimate multi_L(Complex s, const std::vector<ConjugacyClassSU2>& gs, const PrecisionBudget& budget) {
    if (gs.size() < 2 || gs.size() > 3) throw DomainError("multi_L takes 2 or 3 classes");
    // chi_n(-I)/n = (-1)^{n-1}: each -I adds pi to the twist and flips the sign.
    // chi_n(g)/n = (x^n - x^{-n}) / (n (x - x^{-1})) for regular g.
    std::vector<double> regular;
    int minus = 0;
    for (const auto& g : gs) {
        if (g.is_identity()) continue;
        if (g.is_minus_identity()) ++minus;
        else regular.push_back(g.theta());
    }
    const double twist = (minus % 2) * kPi;
    const double sign = minus % 2 == 0 ? 1.0 : -1.0;
    const size_t r = regular.size();
    const Complex shifted = s + static_cast<double>(r);

    Complex denom = 1.0;
    for (double th : regular) denom *= Complex(0.0, 2.0 * std::sin(th));

    Complex total = 0.0;
    double err = 0.0;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        double phi = twist;
        double eps_sign = 1.0;
        for (size_t i = 0; i < r; ++i) {
            if (mask & (1u << i)) {
                phi -= regular[i];
                eps_sign = -eps_sign;
            } else {
                phi += regular[i];
            }
        }
        const Estimate z = polylog_at(shifted, phi, budget);
        total += eps_sign * z.value;
        err += z.error;
    }
    Complex value = sign * total / denom;
    if (is_real(s)) value = Complex(value.real(), 0.0);
    return {value, err / std::abs(denom)};
}

Estimate haar_average_su2(double s, const PrecisionBudget& budget) {
    budget.validate();
    const double goal = std::max(budget.target, 1e-12);
    if (s == -1.0) {
        // zeta^W(-1, theta) (2/pi) sin^2 theta = (2/pi) cos^2(theta/2), integral 1.
        double acc = 0.0;
        const auto& rule = gauss_legendre(64);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double th = 0.5 * kPi * (rule.nodes[i] + 1.0);
            const double c = std::cos(0.5 * th);
            acc += rule.weights[i] * (2.0 / kPi) * c * c;
        }
        return {acc * 0.5 * kPi, 1e-15};
    }
    auto integrate = [&](int n) {
        const auto& rule = gauss_legendre(n);
        double acc = 0.0;
        double err = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double th = 0.5 * kPi * (rule.nodes[i] + 1.0);
            const double w = rule.weights[i] * 0.5 * kPi * (2.0 / kPi) * std::sin(th) * std::sin(th);
            const Estimate v = witten_L_su2(Complex(s), ConjugacyClassSU2(th), budget);
            acc += w * v.value.real();
            err += w * v.error;
        }
        return Estimate{acc, err};
    };
    Estimate prev = integrate(64);
    for (int n = 128; n <= 1024; n *= 2) {
        const Estimate cur = integrate(n);
        const double diff = std::abs(cur.value - prev.value);
        if (diff <= goal * std::max(1.0, std::abs(cur.value))) return {cur.value, diff + cur.error};
        prev = cur;
    }
    throw ConvergenceError("haar_average_su2: quadrature did not converge", prev.value, prev.error);
}

}  // namespace witten
