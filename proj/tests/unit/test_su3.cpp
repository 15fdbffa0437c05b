#include <doctest.h>

#include "common/errors.hpp"
#include "exact/bernoulli.hpp"
#include "su3/su3.hpp"

#include <cmath>

using namespace witten;

namespace {

// 2^s sum_{m,n <= N} (m n (m+n))^{-s} plus the tail bound; only for real s > 1.
std::pair<double, double> brute_double_sum(double s, int N) {
    double sum = 0;
    for (int m = N; m >= 1; --m)
        for (int n = N; n >= 1; --n) sum += std::pow(double(m) * n * (m + n), -s);
    // Terms with max(m, n) > N: at most 2 * zeta(s) * sum_{k>N} k^{-2s}, bounded by an integral.
    double tail = 2 * 1.7 * std::pow(N, 1 - 2 * s) / (2 * s - 1);
    return {std::pow(2.0, s) * sum, std::pow(2.0, s) * tail};
}

}  // namespace

TEST_SUITE("mt_series") {
    TEST_CASE("brute-force double sum oracle at s = 2") {
        auto [sum, tail] = brute_double_sum(2.0, 2000);
        CHECK(tail < 1e-8);
        CHECK(std::abs(mt_series(2.0).value.real() - sum) < 1e-8 + tail);
        CHECK(std::abs(mt_series(2.0).value.imag()) < 1e-12);
    }

    TEST_CASE("decreasing in s and symmetric triangle sum") {
        CHECK(mt_series(3.0).value.real() < mt_series(2.0).value.real());
        CHECK(mt_series(3.0).value.real() > 1.0);
        Complex square = mt_partial_sum(2.0, 400, false);
        Complex triangle = mt_partial_sum(2.0, 400, true);
        CHECK(std::abs(square - triangle) < 1e-10);
    }

    TEST_CASE("domain") { CHECK_THROWS_AS(mt_series(1.0), DomainError); }
}

TEST_SUITE("witten_su3_continued") {
    TEST_CASE("agrees with the double series") {
        for (double s : {2.0, 3.0, 1.5})
            CHECK(std::abs(witten_su3_continued(s).value - mt_series(s).value) < 1e-6);
    }

    TEST_CASE("independent of the strip") {
        MBParams two;
        two.n = 2;
        for (double s : {-0.4, 0.3}) CHECK(std::abs(witten_su3_continued(s).value - witten_su3_continued(s, two).value) < 1e-6);
        CHECK(std::abs(witten_su3_continued(-0.75).value - witten_su3_continued(-0.75, two).value) < 1e-6);
    }

    TEST_CASE("poles and validity") {
        CHECK(su3_is_pole(2.0 / 3));
        CHECK(su3_is_pole(0.5));
        CHECK(su3_is_pole(-0.5));
        CHECK(!su3_is_pole(-1.0));
        CHECK_THROWS_AS(witten_su3_continued(2.0 / 3), PoleError);
        CHECK_THROWS_AS(witten_su3_continued(0.5 + 1e-8), PoleError);
        CHECK_THROWS_AS(witten_su3_continued(-2.0), DomainError);  // below the n = 1 strip
        MBParams bad;
        bad.epsilon = 1.5;
        CHECK_THROWS_AS(witten_su3_continued(2.0, bad), DomainError);
    }

    TEST_CASE("zero at s = -1 from the continuation") {
        CHECK(std::abs(witten_su3_continued(-1.0).value) < 1e-8);
    }

    TEST_CASE("finite part is strip independent") {
        MBParams two;
        two.n = 2;
        CHECK(std::abs(witten_su3_finite_part(0.5).value - witten_su3_finite_part(0.5, two).value) < 1e-6);
    }
}

TEST_SUITE("special_value_su3") {
    TEST_CASE("vanishes for n = 1..8") {
        for (int n = 1; n <= 8; ++n) CHECK(special_value_su3(n).is_zero());
        CHECK_THROWS_AS(special_value_su3(0), DomainError);
    }

    TEST_CASE("odd n vanish term by term") {
        for (int n : {1, 3, 5, 7}) {
            SU3SpecialTerms t = special_value_su3_terms(n);
            CHECK(t.gamma_term.is_zero());
            CHECK(t.limit_term.is_zero());
            for (const auto& term : t.sum_terms) CHECK(term.is_zero());
        }
    }

    TEST_CASE("even n cancel between the pieces") {
        SU3SpecialTerms t = special_value_su3_terms(2);
        BigRational sum = t.gamma_term + t.limit_term;
        for (const auto& term : t.sum_terms) sum = sum + term;
        CHECK(sum.is_zero());
        CHECK(!t.gamma_term.is_zero());
    }
}

TEST_SUITE("bernoulli_convolution_check") {
    TEST_CASE("n = 2 against the hand-computed value") {
        ConvolutionCheck c = bernoulli_convolution_check(2);
        CHECK(c.lhs == BigRational(1, 14400));
        CHECK(c.rhs == BigRational(2, 120) * zeta_neg_int(7));
    }

    TEST_CASE("equality for even n <= 12") {
        for (int n = 2; n <= 12; n += 2) {
            ConvolutionCheck c = bernoulli_convolution_check(n);
            CHECK(c.lhs == c.rhs);
        }
        CHECK_THROWS_AS(bernoulli_convolution_check(3), DomainError);
    }
}
