#include <doctest.h>

#include "common/errors.hpp"
#include "numerics/gamma.hpp"
#include "numerics/zeta.hpp"
#include "polylog/polylog.hpp"

#include <cmath>
#include <numbers>

using namespace witten;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942854;

bool rel_close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// Eulerian number A(m, k): permutations of m elements with k descents.
long eulerian(int m, int k) {
    if (k < 0 || k >= std::max(m, 1)) return m == 0 && k == 0 ? 1 : 0;
    if (m == 1) return k == 0 ? 1 : 0;
    return (k + 1) * eulerian(m - 1, k) + (m - k) * eulerian(m - 1, k - 1);
}

}  // namespace

TEST_SUITE("unit_circle_point") {
    TEST_CASE("reduction and inverse") {
        CHECK(UnitCirclePoint(-kPi / 2).theta() == doctest::Approx(1.5 * kPi));
        CHECK(UnitCirclePoint(2 * kPi).is_one());
        CHECK(UnitCirclePoint(kPi / 6).inverse().signed_theta() == -kPi / 6);
        CHECK(UnitCirclePoint(kPi).signed_theta() == kPi);
        CHECK_THROWS_AS(UnitCirclePoint(NAN), DomainError);
    }
}

TEST_SUITE("polylog_series") {
    TEST_CASE("closed-form values") {
        CHECK(rel_close(polylog_series(2.0, UnitCirclePoint(0.0)).value, kPi * kPi / 6, 1e-12));
        CHECK(rel_close(polylog_series(1.0, UnitCirclePoint(kPi / 2)).value, {-0.5 * std::log(2.0), kPi / 4}, 1e-10));
        CHECK(rel_close(polylog_series(3.0, UnitCirclePoint(kPi)).value, -0.75 * kZeta3, 1e-12));
        // Z(1, e^{i theta}) = -log(1 - e^{i theta})
        for (double th : {0.3, 1.0, 2.0, 4.0}) {
            Complex expected = -std::log(1.0 - std::polar(1.0, th));
            CHECK(rel_close(polylog_series(1.0, UnitCirclePoint(th)).value, expected, 1e-10));
        }
    }

    TEST_CASE("golden values") {
        CHECK(rel_close(polylog_series(2.0, UnitCirclePoint(0.05)).value,
                        {1.5670192505084816012, 0.19978834981051267313}, 1e-11));
        CHECK(rel_close(polylog_series({0.5, 3}, UnitCirclePoint(2.5)).value,
                        {-1.4283141146526414797, 0.30518691001266863527}, 1e-10));
    }

    TEST_CASE("domain") {
        CHECK_THROWS_AS(polylog_series(-1.0, UnitCirclePoint(1.0)), DomainError);
        CHECK_THROWS_AS(polylog_series(1.0, UnitCirclePoint(0.0)), DomainError);
    }
}

TEST_SUITE("polylog_continued") {
    TEST_CASE("values at s = -1 and s = 0") {
        for (double th : {kPi / 3, kPi / 2, kPi}) {
            double expected = -1.0 / (4 * std::pow(std::sin(th / 2), 2));
            CHECK(rel_close(polylog_continued(-1.0, UnitCirclePoint(th)).value, expected, 1e-10));
        }
        CHECK(rel_close(polylog_continued(0.0, UnitCirclePoint(kPi)).value, -0.5, 1e-12));
    }

    TEST_CASE("overlap with the direct series") {
        for (double s : {1.5, 2.0, 3.0})
            for (double th : {kPi / 3, kPi, 1.5 * kPi}) {
                UnitCirclePoint x(th);
                CHECK(rel_close(polylog_continued(s, x).value, polylog_series(s, x).value, 1e-9));
            }
    }

    TEST_CASE("golden values across the tested window") {
        CHECK(rel_close(polylog_continued(-39.5, UnitCirclePoint(1.0)).value,
                        {9.0937485148774742216e+46, 9.0937485148774742216e+46}, 1e-10));
        CHECK(rel_close(polylog_continued({-20, 30}, UnitCirclePoint(2.0)).value,
                        {9.3342645149985737276e+24, 6.1971401590957905686e+23}, 1e-10));
        CHECK(rel_close(polylog_continued({1, 50}, UnitCirclePoint(0.7)).value,
                        {0.087830036249217035431, 0.41185094784646517673}, 1e-9));
        CHECK(rel_close(polylog_continued(-2.5, UnitCirclePoint(kPi / 3)).value,
                        {2.0100407747624072352, -1.994484359214899018}, 1e-10));
    }

    TEST_CASE("theta = 0 is rejected") { CHECK_THROWS_AS(polylog_continued(0.5, UnitCirclePoint(0.0)), DomainError); }
}

TEST_SUITE("jonquiere") {
    TEST_CASE("agrees with the recursion") {
        CHECK(rel_close(polylog_via_jonquiere(-1.0, UnitCirclePoint(kPi / 2)).value, -0.5, 1e-10));
        CHECK(rel_close(polylog_via_jonquiere(0.5, UnitCirclePoint(kPi)).value,
                        polylog_continued(0.5, UnitCirclePoint(kPi)).value, 1e-8));
        for (double s : {-3.0, -2.0, -0.5, 0.0, 1.5, 2.5})
            for (double th : {0.4, 2.0, 5.0}) {
                UnitCirclePoint x(th);
                CHECK_MESSAGE(rel_close(polylog_via_jonquiere(s, x).value, polylog_continued(s, x).value, 1e-8),
                              "s=" << s << " theta=" << th);
            }
    }

    TEST_CASE("odd symmetry at s = -2") {
        UnitCirclePoint x(1.1);
        Complex sum = polylog_via_jonquiere(-2.0, x).value + polylog_via_jonquiere(-2.0, x.inverse()).value;
        CHECK(std::abs(sum) < 1e-10);
    }

    TEST_CASE("positive integers are ill-conditioned") {
        CHECK_THROWS_AS(polylog_via_jonquiere(2.0, UnitCirclePoint(1.0)), ConditioningError);
    }
}

TEST_SUITE("closed_form") {
    TEST_CASE("numerators are Eulerian numbers") {
        for (unsigned m = 1; m <= 10; ++m) {
            auto [num, den] = polylog_closed_form(m).unit_constant_form();
            // Z(-m, x) = x A_m(x) / (1-x)^{m+1}
            CHECK(den == (Polynomial::constant(BigRational(1)) - Polynomial::identity()).pow(m + 1));
            for (int k = 0; k < static_cast<int>(m); ++k)
                CHECK_MESSAGE(num.coeff(k + 1) == BigRational(eulerian(m, k)), "m=" << m << " k=" << k);
            CHECK(num.coeff(0).is_zero());
        }
    }

    TEST_CASE("float evaluation agrees with the continuation") {
        for (unsigned m = 0; m <= 6; ++m)
            for (double th : {0.7, 2.0, kPi}) {
                UnitCirclePoint x(th);
                CHECK(rel_close(polylog_eval_neg(m, x), polylog_continued(-double(m), x).value, 1e-10));
            }
    }

    TEST_CASE("parity is exact in floating point") {
        for (unsigned m = 1; m <= 6; ++m)
            for (int k = 1; k <= 11; ++k) {
                UnitCirclePoint x(k * kPi / 6);
                Complex v = polylog_eval_neg(m, x) + (m % 2 ? -1.0 : 1.0) * polylog_eval_neg(m, x.inverse());
                CHECK(std::abs(v) <= 1e-10);
            }
        CHECK(std::abs(polylog_eval_neg(1, UnitCirclePoint(kPi)) - Complex(-0.25, 0.0)) < 1e-15);
        CHECK(std::abs(polylog_eval_neg(0, UnitCirclePoint(kPi / 2)) - Complex(-0.5, 0.5)) < 1e-15);
        CHECK_THROWS_AS(polylog_eval_neg(2, UnitCirclePoint(0.0)), DomainError);
    }
}
