#include "numerics/gamma.hpp"

#include "common/errors.hpp"
#include "exact/bernoulli.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace witten {

namespace {

constexpr double kPi = std::numbers::pi;

// r in [-1, 1] with x = r + 2k.
double reduce2(double x) { return x - 2.0 * std::nearbyint(0.5 * x); }

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

// Stirling coefficients B_{2k} / (2k (2k-1)), k = 1..kTerms.
constexpr int kTerms = 16;
const std::array<double, kTerms>& stirling_coefficients() {
    static const std::array<double, kTerms> c = [] {
        std::array<double, kTerms> out{};
        for (int k = 1; k <= kTerms; ++k)
            out[k - 1] = (bernoulli(2 * k) / BigRational(2L * k * (2 * k - 1))).to_double();
        return out;
    }();
    return c;
}

// log Gamma for Re z >= 0.5 by upward shift and the Stirling series.
Complex log_gamma_right(Complex z) {
    Complex shift_log = 0.0;
    while (std::abs(z) < 16.0 || z.real() < 8.0) {
        shift_log += std::log(z);
        z += 1.0;
    }
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex p = inv;
    for (double c : stirling_coefficients()) {
        Complex term = c * p;
        series += term;
        if (std::abs(term) < 1e-18 * std::abs(series)) break;
        p *= inv2;
    }
    const Complex lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
    return lg - shift_log;
}

}  // namespace

double sin_pi(double x) {
    double r = reduce2(x);  // [-1, 1]
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

Complex sin_pi(Complex z) {
    const double y = kPi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

Complex cos_pi(Complex z) {
    const double y = kPi * z.imag();
    return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma pole at non-positive integer", z);
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Reflection with the branch correction that keeps the principal branch continuous.
    const double k = std::floor(0.5 * z.real() + 0.25);
    const Complex corr(0.0, std::copysign(2.0 * kPi, z.imag()) * k);
    return std::log(kPi) - std::log(sin_pi(z)) - log_gamma_right(1.0 - z) + corr;
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex rgamma(Complex z) {
    if (is_nonpositive_integer(z)) return 0.0;
    return std::exp(-log_gamma(z));
}

BigRational gamma_ratio_at_neg(int n) {
    if (n < 1) throw DomainError("gamma_ratio_at_neg needs n >= 1");
    // Residue of Gamma at -k is (-1)^k / k!. Near s = -n, Gamma(s) ~ res(-n)/(s+n) and
    // Gamma(2s-1) ~ res(-(2n+1)) / (2(s+n)).
    auto residue = [](long k) { return BigRational(k % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(k)); };
    return residue(2L * n + 1) / BigRational(2) / residue(n);
}

}  // namespace witten
