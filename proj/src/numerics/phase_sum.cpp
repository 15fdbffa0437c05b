#include "numerics/phase_sum.hpp"

#include "common/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace witten {

namespace {

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

// e^{i n theta} n^{-s}
Complex term(long n, long double theta, Complex s) {
    const double logn = std::log(static_cast<double>(n));
    const long double phase = std::fmod(static_cast<long double>(n) * theta, kTwoPiL);
    return std::polar(std::exp(-s.real() * logn), static_cast<double>(phase) - s.imag() * logn);
}

Complex partial_sum(Complex s, long double theta, long first, long last, double& max_term) {
    // Pairwise blocks keep the accumulated rounding small for long sums.
    Complex total = 0.0;
    Complex block = 0.0;
    int count = 0;
    max_term = 0.0;
    for (long n = first; n <= last; ++n) {
        Complex t = term(n, theta, s);
        max_term = std::max(max_term, std::abs(t));
        block += t;
        if (++count == 256) {
            total += block;
            block = 0.0;
            count = 0;
        }
    }
    return total + block;
}

}  // namespace

Complex unit_point(long double theta) {
    const long double r = std::fmod(theta, kTwoPiL);
    return {static_cast<double>(std::cos(r)), static_cast<double>(std::sin(r))};
}

Estimate phase_sum(Complex s, double theta, int first, const PrecisionBudget& budget) {
    budget.validate();
    if (!(theta > 0.0) || !(theta < 2.0 * std::numbers::pi))
        throw DomainError("phase_sum needs theta in (0, 2pi)");
    if (first < 1) throw DomainError("phase_sum needs first >= 1");
    const double sigma = s.real();
    if (!(sigma > 0.0)) throw DomainError("phase_sum needs Re s > 0");

    const long double th = theta;
    const Complex x = unit_point(th);
    const double abs_s = std::abs(s);
    const double r = std::min(theta, 2.0 * std::numbers::pi - theta);
    const double gap = 2.0 * std::sin(0.5 * r);  // |1 - x|
    const double scale = std::pow(static_cast<double>(first), -sigma);
    const double tol = 0.1 * budget.target * scale;

    // Plain truncation: |tail from N| <= 2|s| N^{-sigma} / (sigma |1 - x|), and for
    // sigma > 1 also <= N^{1-sigma}/(sigma-1) + N^{-sigma}.
    double n_plain = std::pow(2.0 * abs_s / (sigma * gap * tol), 1.0 / sigma);
    if (sigma > 1.0) n_plain = std::min(n_plain, std::pow(tol * (sigma - 1.0) / 2.0, -1.0 / (sigma - 1.0)));
    n_plain = std::max(n_plain, static_cast<double>(first));

    // Asymptotic tail: terms behave like (|s|+j)^j / (r N)^j.
    const double n_euler = std::max(first + 16.0, std::ceil((2.0 * abs_s + 48.0) / r));

    if (n_plain <= budget.max_terms && (n_plain <= n_euler || n_euler > budget.max_terms)) {
        const long N = static_cast<long>(std::ceil(n_plain));
        double max_term = 0.0;
        Complex sum = partial_sum(s, th, first, N - 1, max_term);
        const double bound = std::min(2.0 * abs_s * std::pow(static_cast<double>(N), -sigma) / (sigma * gap),
                                      sigma > 1.0 ? std::pow(static_cast<double>(N), 1.0 - sigma) / (sigma - 1.0) +
                                                        std::pow(static_cast<double>(N), -sigma)
                                                  : std::numeric_limits<double>::infinity());
        return {sum, bound + 4.0 * std::numeric_limits<double>::epsilon() * max_term * std::sqrt(static_cast<double>(N))};
    }

    long N = static_cast<long>(n_euler);
    if (N > budget.max_terms) {
        throw ConvergenceError("phase_sum: angle too close to 0 mod 2pi for the term budget", Complex(0.0),
                               std::numeric_limits<double>::infinity());
    }

    const Complex w = x / (1.0 - x);
    const int jmax = 400;
    // e_j = g_j r^j / j!, via (1-x) g_m = x sum_{k<m} C(m,k) g_k.
    std::vector<Complex> e;
    e.reserve(jmax);
    e.push_back(1.0 / (1.0 - x));
    std::vector<double> rpow{1.0};  // r^k / k!

    double max_term = 0.0;
    const Complex head = partial_sum(s, th, first, N - 1, max_term);
    const Complex lead = term(N, th, s);
    const double rn = r * static_cast<double>(N);

    Complex tail = 0.0;
    Complex p = 1.0;  // prod_{i<j} (-s - i) / (r N)
    double emax = 0.0;
    double last = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int j = 0; j < jmax; ++j) {
        if (j > 0) {
            rpow.push_back(rpow.back() * r / j);
            Complex acc = 0.0;
            for (int k = 0; k < j; ++k) acc += e[k] * rpow[j - k];
            e.push_back(w * acc);
            p *= (-s - static_cast<double>(j - 1)) / rn;
        }
        tail += e[j] * p;
        // e_j oscillates when two poles of 1/(1 - x e^t) are equidistant; use its running
        // maximum as the envelope.
        emax = std::max(emax, std::abs(e[j]));
        last = emax * std::abs(p) * std::abs(lead);
        if (last < tol && j >= 2) {
            converged = true;
            break;
        }
        if (std::abs(-s - static_cast<double>(j)) > rn) break;  // envelope starts growing
    }
    const Complex value = head + lead * tail;
    const double err = last + 4.0 * std::numeric_limits<double>::epsilon() * max_term * std::sqrt(static_cast<double>(N));
    if (!converged) throw ConvergenceError("phase_sum: tail expansion did not converge", value, err);
    return {value, err};
}

}  // namespace witten
