#include "su3/su3.hpp"

#include "common/errors.hpp"
#include "exact/bernoulli.hpp"
#include "numerics/gamma.hpp"
#include "numerics/quadrature.hpp"
#include "numerics/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace witten {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleDistance = 1e-6;
constexpr int kCirclePoints = 32;

// Power substitution u = w^4 on [0, 1] with a 48-point rule:
// int_0^1 u^{a-1} h(u) du = 4 int_0^1 w^{4a-1} h(w^4) dw.
template <class F>
Complex endpoint_integral(Complex a, F h) {
    const auto& rule = gauss_legendre(48);
    Complex acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double w = 0.5 * (rule.nodes[i] + 1.0);
        const double u = w * w * w * w;
        acc += rule.weights[i] * 0.5 * 4.0 * std::exp((4.0 * a - 1.0) * std::log(w)) * h(u);
    }
    return acc;
}

// d^k/dm^k m^{-s} = (-s)(-s-1)...(-s-k+1) m^{-s-k}
Complex power_derivative(Complex s, double m, int k, Complex base) {
    Complex f = base;
    for (int i = 0; i < k; ++i) f *= (-s - static_cast<double>(i)) / m;
    return f;
}

struct SeriesParts {
    Complex value;
    double error;
};

SeriesParts mt_series_at(Complex s, int N) {
    std::vector<Complex> a(2 * N + 1);
    for (int k = 1; k <= 2 * N; ++k) a[k] = std::exp(-s * std::log(static_cast<double>(k)));
    Complex square = mt_partial_sum(s, N, true);

    const double A = N + 0.5;
    const Complex A_1m2s = std::exp((1.0 - 2.0 * s) * std::log(A));
    const Complex As = std::exp(-s * std::log(A));
    Complex t1 = 0.0;
    double t1_err = 0.0;
    for (int n = 1; n <= N; ++n) {
        const double ratio = n / A;
        // sum_{m > N} m^{-s} (m+n)^{-s} = int_A^inf g + g'(A)/24 - 7 g'''(A)/5760 + ...
        const Complex integral =
            A_1m2s * endpoint_integral(2.0 * s - 1.0, [&](double u) { return std::exp(-s * std::log1p(ratio * u)); });
        const Complex Bs = std::exp(-s * std::log(A + n));
        Complex d1 = 0.0, d3 = 0.0;
        const int binom3[4] = {1, 3, 3, 1};
        for (int k = 0; k <= 1; ++k)
            d1 += (k == 0 ? 1.0 : 1.0) * power_derivative(s, A, k, As) * power_derivative(s, A + n, 1 - k, Bs);
        for (int k = 0; k <= 3; ++k)
            d3 += static_cast<double>(binom3[k]) * power_derivative(s, A, k, As) * power_derivative(s, A + n, 3 - k, Bs);
        const Complex inner = integral + d1 / 24.0 - 7.0 * d3 / 5760.0;
        t1 += a[n] * inner;
        t1_err += std::abs(a[n]) * std::abs(d3) * 7.0 / 5760.0 * (std::abs(s) + 4.0) * (std::abs(s) + 5.0) / (A * A);
    }
    t1 *= 2.0;
    t1_err *= 2.0;
    // sum_{m, n > N} ~ A^{2-3s} (2/(3s-2)) int_0^1 t^{2s-2} (1+t)^{-s} dt
    const Complex J = endpoint_integral(2.0 * s - 1.0, [&](double t) { return std::exp(-s * std::log1p(t)); });
    const Complex t2 = std::exp((2.0 - 3.0 * s) * std::log(A)) * (2.0 / (3.0 * s - 2.0)) * J;
    const double t2_err = std::abs(t2) * std::abs(s) * (std::abs(s) + 1.0) / (6.0 * A * A);
    const Complex pre = std::exp(s * std::log(2.0));
    const Complex value = pre * (square + t1 + t2);
    const double err = std::abs(pre) * (t1_err + t2_err + 1e-15 * N * std::abs(square));
    return {value, err};
}

Complex mb_raw(Complex s, const MBParams& p, const PrecisionBudget& budget) {
    const int M = p.M();
    const double c = M - p.epsilon;
    const Complex lgs = log_gamma(s);
    // Gamma(2s-1) Gamma(1-s)/Gamma(s) zeta(3s-1)
    const Complex t_gamma =
        std::exp(log_gamma(2.0 * s - 1.0) + log_gamma(1.0 - s) - lgs) * riemann_zeta(3.0 * s - 1.0, budget).value;
    Complex t_sum = 0.0;
    Complex poch = 1.0;  // s(s+1)...(s+k-1)/k!
    for (int k = 0; k < M; ++k) {
        if (k > 0) poch *= (s + static_cast<double>(k - 1)) / static_cast<double>(k);
        const double sgn = k % 2 == 0 ? 1.0 : -1.0;
        t_sum += sgn * poch * riemann_zeta(2.0 * s + static_cast<double>(k), budget).value *
                 riemann_zeta(s - static_cast<double>(k), budget).value;
    }
    auto integrand = [&](double y) {
        const Complex z(c, y);
        return std::exp(log_gamma(s + z) + log_gamma(-z) - lgs) * riemann_zeta(2.0 * s + z, budget).value *
               riemann_zeta(s - z, budget).value;
    };
    const double T = p.height > 0.0 ? p.height : 40.0 + 10.0 * std::abs(s.imag());
    const int panels = static_cast<int>(std::ceil(2.0 * T));
    const double width = 2.0 * T / panels;
    auto quad = [&](int order) {
        const auto& rule = gauss_legendre(order);
        Complex acc = 0.0;
        for (int k = 0; k < panels; ++k) {
            const double lo = -T + k * width;
            Complex part = 0.0;
            for (size_t i = 0; i < rule.nodes.size(); ++i)
                part += rule.weights[i] * integrand(lo + 0.5 * width * (rule.nodes[i] + 1.0));
            acc += 0.5 * width * part;
        }
        return acc;
    };
    Complex prev = quad(p.order);
    Complex integral = prev;
    bool stable = false;
    for (int order = 2 * p.order; order <= 8 * p.order; order *= 2) {
        integral = quad(order);
        if (std::abs(integral - prev) <= 1e-12 * std::max(1.0, std::abs(integral))) {
            stable = true;
            break;
        }
        prev = integral;
    }
    const Complex total = std::exp(s * std::log(2.0)) * (t_gamma + t_sum + integral / (2.0 * kPi));
    if (!stable) throw ConvergenceError("witten_su3_continued: contour quadrature did not stabilise", total,
                                        std::abs(integral - prev));
    return total;
}

// Singular points of the explicit terms: integers, half-integers <= 1/2, and 2/3.
std::vector<double> explicit_singularities_near(Complex s) {
    std::vector<double> pts{2.0 / 3.0};
    const double x = s.real();
    for (double k = std::floor(x) - 2.0; k <= std::ceil(x) + 2.0; k += 1.0) {
        pts.push_back(k);
        if (k + 0.5 <= 0.5) pts.push_back(k + 0.5);
    }
    return pts;
}

bool is_genuine_pole(double p) {
    if (std::abs(p - 2.0 / 3.0) < 1e-12) return true;
    const double h = p - 0.5;
    return h <= 0.0 && h == std::nearbyint(h);
}

struct Nearest {
    double point;
    double distance;
    double gap;  // distance from point to the next singular point
};

Nearest nearest_singularity(Complex s) {
    auto pts = explicit_singularities_near(s);
    Nearest best{0.0, std::numeric_limits<double>::infinity(), 0.0};
    for (double p : pts) {
        double d = std::abs(s - Complex(p, 0.0));
        if (d < best.distance) best = {p, d, 0.0};
    }
    best.gap = std::numeric_limits<double>::infinity();
    for (double p : pts)
        if (p != best.point) best.gap = std::min(best.gap, std::abs(p - best.point));
    return best;
}

// Cauchy integral over |z - centre| = rho evaluated at s (inside); trapezoid rule.
Complex circle_value(Complex centre, double rho, Complex s, bool mean_only, const MBParams& p,
                     const PrecisionBudget& budget) {
    Complex acc = 0.0;
    for (int k = 0; k < kCirclePoints; ++k) {
        const Complex w = std::polar(1.0, 2.0 * kPi * (k + 0.5) / kCirclePoints);
        const Complex z = centre + rho * w;
        const Complex f = mb_raw(z, p, budget);
        acc += mean_only ? f : f * (rho * w) / (z - s);
    }
    return acc / static_cast<double>(kCirclePoints);
}

}  // namespace

void MBParams::validate() const {
    if (n < 1) throw DomainError("MBParams.n must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("MBParams.epsilon must lie in (0, 1)");
    if (height < 0.0) throw DomainError("MBParams.height must be positive (or 0 for automatic)");
    if (order < 4) throw DomainError("MBParams.order must be >= 4");
}

bool MBParams::admits(Complex s) const {
    return s.real() > -n - 0.5 + 0.5 * epsilon && s.real() < M() + 1.0 - epsilon;
}

Complex mt_partial_sum(Complex s, int N, bool use_symmetry) {
    if (N < 1) throw DomainError("mt_partial_sum needs N >= 1");
    std::vector<Complex> a(2 * N + 1);
    for (int k = 1; k <= 2 * N; ++k) a[k] = std::exp(-s * std::log(static_cast<double>(k)));
    Complex total = 0.0;
    if (use_symmetry) {
        for (int m = 1; m <= N; ++m) {
            Complex row = 0.0;
            for (int n = m + 1; n <= N; ++n) row += a[n] * a[m + n];
            total += 2.0 * a[m] * row + a[m] * a[m] * a[2 * m];
        }
    } else {
        for (int m = 1; m <= N; ++m) {
            Complex row = 0.0;
            for (int n = 1; n <= N; ++n) row += a[n] * a[m + n];
            total += a[m] * row;
        }
    }
    return total;
}

Estimate mt_series(Complex s, const PrecisionBudget& budget) {
    budget.validate();
    if (!(s.real() > 1.0)) throw DomainError("mt_series needs Re s > 1");
    const int cap = std::max(256, std::min(budget.max_terms, 8192));
    SeriesParts r{};
    for (int N = 256; N <= cap; N *= 2) {
        r = mt_series_at(s, N);
        if (r.error <= budget.target * std::abs(r.value)) return {r.value, r.error};
    }
    throw ConvergenceError("mt_series: tail corrections above target", r.value, r.error);
}

bool su3_is_pole(Complex s0) {
    const Nearest near = nearest_singularity(s0);
    return near.distance < kPoleDistance && is_genuine_pole(near.point);
}

Estimate witten_su3_continued(Complex s, const MBParams& params, const PrecisionBudget& budget) {
    params.validate();
    budget.validate();
    if (!params.admits(s))
        throw DomainError("s outside the validity strip of the contour (need -n-1/2+eps/2 < Re s < 2n+3-eps)");
    const Nearest near = nearest_singularity(s);
    if (near.distance >= kPoleDistance) {
        const Complex value = mb_raw(s, params, budget);
        return {value, 1e-9 * std::max(1.0, std::abs(value))};
    }
    if (is_genuine_pole(near.point))
        throw PoleError("zeta^W_SU(3) has a pole at s = " + std::to_string(near.point), Complex(near.point, 0.0));
    const double rho = std::min(0.1, 0.3 * near.gap);
    const Complex centre(near.point, 0.0);
    if (!params.admits(centre - rho) || !params.admits(centre + rho))
        throw DomainError("removable point too close to the edge of the validity strip; increase n");
    const Complex value = circle_value(centre, rho, s, false, params, budget);
    return {value, 1e-8 * std::max(1.0, std::abs(value))};
}

Estimate witten_su3_finite_part(Complex s0, const MBParams& params, const PrecisionBudget& budget) {
    params.validate();
    budget.validate();
    const Nearest near = nearest_singularity(s0);
    if (near.distance >= kPoleDistance || !is_genuine_pole(near.point))
        return witten_su3_continued(s0, params, budget);
    const double rho = std::min(0.1, 0.3 * near.gap);
    const Complex centre(near.point, 0.0);
    if (!params.admits(centre - rho) || !params.admits(centre + rho))
        throw DomainError("pole too close to the edge of the validity strip; increase n");
    const Complex value = circle_value(centre, rho, centre, true, params, budget);
    return {value, 1e-8 * std::max(1.0, std::abs(value))};
}

SU3SpecialTerms special_value_su3_terms(int n) {
    if (n < 1) throw DomainError("special_value_su3 needs n >= 1");
    const unsigned un = static_cast<unsigned>(n);
    const BigRational scale = BigRational(2).pow(-n);
    const BigRational z3n1 = zeta_neg_int(3 * un + 1);
    SU3SpecialTerms t;
    // Gamma(2s-1)/Gamma(s) -> gamma_ratio_at_neg(n), Gamma(1-s) -> n!
    t.gamma_term = scale * gamma_ratio_at_neg(n) * factorial(un) * z3n1;
    t.total = t.gamma_term;
    for (unsigned k = 0; k <= 2 * un; ++k) {
        const BigRational sgn(k % 2 == 0 ? 1 : -1);
        const BigRational poch = rising_factorial(BigRational(-n), k) / factorial(k);
        const BigRational term = scale * sgn * poch * zeta_neg_int(2 * un - k) * zeta_neg_int(un + k);
        t.sum_terms.push_back(term);
        t.total += term;
    }
    // k = 2n+1: (s)_{2n+1} zeta(2s+2n+1) -> (prod_{j != n} (j - n)) / 2
    BigRational prod(1);
    for (int j = 0; j <= 2 * n; ++j)
        if (j != n) prod *= BigRational(j - n);
    t.limit_term = scale * BigRational(-1) * prod / factorial(2 * un + 1) * BigRational(1, 2) * z3n1;
    t.total += t.limit_term;
    return t;
}

BigRational special_value_su3(int n) { return special_value_su3_terms(n).total; }

ConvolutionCheck bernoulli_convolution_check(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("bernoulli_convolution_check needs even n >= 2");
    const unsigned un = static_cast<unsigned>(n);
    ConvolutionCheck r;
    for (unsigned k = 0; k <= un; ++k) {
        const unsigned l = un - k;
        r.lhs += zeta_neg_int(un + k) * zeta_neg_int(un + l) / (factorial(k) * factorial(l));
    }
    r.rhs = factorial(un) / factorial(2 * un + 1) * zeta_neg_int(3 * un + 1);
    return r;
}

}  // namespace witten
