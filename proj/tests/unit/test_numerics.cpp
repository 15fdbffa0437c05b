#include <doctest.h>

#include "common/errors.hpp"
#include "exact/bernoulli.hpp"
#include "numerics/gamma.hpp"
#include "numerics/quadrature.hpp"
#include "numerics/zeta.hpp"

#include <cmath>
#include <numbers>

using namespace witten;

namespace {

constexpr double kPi = std::numbers::pi;

bool rel_close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("riemann_zeta") {
    TEST_CASE("even values from Bernoulli numbers") {
        // zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)
        for (int n = 1; n <= 10; ++n) {
            double b = bernoulli(2 * n).to_double();
            double expected = (n % 2 ? 1 : -1) * b * std::pow(2 * kPi, 2 * n) / (2 * std::tgamma(2 * n + 1.0));
            CHECK(rel_close(riemann_zeta(2.0 * n).value, expected, 1e-13));
        }
    }

    TEST_CASE("negative integers match the exact values") {
        for (unsigned k = 0; k <= 25; ++k)
            CHECK(rel_close(riemann_zeta(-double(k)).value, zeta_neg_int(k).to_double(), 1e-11));
    }

    TEST_CASE("golden values (50-digit reference)") {
        CHECK(rel_close(riemann_zeta({0.5, 14}).value, {0.022241142609993589246, -0.1032581232664500579}, 1e-11));
        CHECK(rel_close(riemann_zeta({-3, 50}).value, {-1116.7403422286238265, -743.11768891862636464}, 1e-11));
        CHECK(rel_close(riemann_zeta(-39.5).value, 858001934235335.85762, 1e-11));
        Complex tail = riemann_zeta({40, -50}).value - 1.0;
        CHECK(std::abs(tail - Complex(-9.049655511774505402e-13, -9.0653106193274080947e-14)) < 2.3e-16);
    }

    TEST_CASE("pole and error estimate") {
        CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
        Estimate e = riemann_zeta(3.0);
        CHECK(e.error > 0);
        CHECK(e.error < 1e-10);
    }
}

TEST_SUITE("hurwitz_zeta") {
    TEST_CASE("a = 1/2 relation") {
        for (double s : {2.0, 3.5, -1.5, -4.25}) {
            Complex expected = (std::pow(2.0, s) - 1.0) * riemann_zeta(s).value;
            CHECK(rel_close(hurwitz_zeta(s, 0.5).value, expected, 1e-11));
        }
    }

    TEST_CASE("duplication zeta(s,a/2) + zeta(s,(a+1)/2) = 2^s zeta(s,a)") {
        for (Complex s : {Complex(2.5, 0), Complex(-1.5, 2), Complex(0.5, 10)}) {
            for (double a : {0.2, 0.45, 0.9}) {
                Complex lhs = hurwitz_zeta(s, a / 2).value + hurwitz_zeta(s, (a + 1) / 2).value;
                Complex rhs = std::pow(Complex(2.0), s) * hurwitz_zeta(s, a).value;
                CHECK(rel_close(lhs, rhs, 1e-11));
            }
        }
    }

    TEST_CASE("golden values") {
        CHECK(rel_close(hurwitz_zeta(2.5, 0.3).value, 21.069239202247724917, 1e-12));
        CHECK(rel_close(hurwitz_zeta(-1.5, 0.7).value, 0.023478274333161483805, 1e-11));
        CHECK(rel_close(hurwitz_zeta(-7.3, 0.2).value, 0.0031065832078965774895, 1e-10));
        CHECK(rel_close(hurwitz_zeta({0.5, 10}, 0.25).value, {0.043386611063231386309, 0.76808042228325868085}, 1e-11));
    }

    TEST_CASE("domain") {
        CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
        CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), DomainError);
        CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), PoleError);
    }
}

TEST_SUITE("gamma") {
    TEST_CASE("recurrence exp(lgamma(z+1) - lgamma(z)) = z on a grid") {
        for (double x = -4.7; x < 30; x += 1.37)
            for (double y : {-20.0, -1.5, 0.0, 0.3, 7.0}) {
                Complex z(x, y);
                CHECK(rel_close(std::exp(log_gamma(z + 1.0) - log_gamma(z)), z, 1e-10));
            }
    }

    TEST_CASE("reflection formula") {
        for (Complex z : {Complex(0.3, 0), Complex(0.25, 2), Complex(-1.7, 0.4)})
            CHECK(rel_close(gamma(z) * gamma(1.0 - z), kPi / sin_pi(z), 1e-12));
    }

    TEST_CASE("golden values and branch") {
        CHECK(rel_close(log_gamma({-2.5, 0.1}), {-0.10314924404281920289, -9.314444268359838115}, 1e-12));
        CHECK(rel_close(log_gamma({10, 30}), {-13.73976365799715949, 85.47976397251643709}, 1e-13));
        CHECK(rel_close(log_gamma(0.3), 1.0957979948180755606, 1e-14));
        CHECK(rel_close(gamma(Complex(5.0)), 24.0, 1e-14));
        CHECK(std::abs(rgamma(Complex(-3.0))) == 0.0);
    }

    TEST_CASE("exact trigonometric reduction") {
        CHECK(sin_pi(1.0) == 0.0);
        CHECK(sin_pi(-7.0) == 0.0);
        CHECK(cos_pi(0.5) == 0.0);
        CHECK(sin_pi(0.5) == 1.0);
    }
}

TEST_SUITE("quadrature") {
    TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
        for (int n : {8, 16, 48, 64}) {
            const auto& rule = gauss_legendre(n);
            double sum_w = 0, m4 = 0, high = 0;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                sum_w += rule.weights[i];
                m4 += rule.weights[i] * std::pow(rule.nodes[i], 4);
                high += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
            }
            CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
            CHECK(m4 == doctest::Approx(0.4).epsilon(1e-14));
            CHECK(high == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-12));
        }
    }
}
