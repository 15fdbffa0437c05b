#include <doctest.h>

#include "common/errors.hpp"
#include "padic/padic.hpp"

using namespace witten;

namespace {

BigRational R(long n, long d = 1) { return BigRational(n, d); }

Polynomial P(std::vector<BigRational> c) { return Polynomial("p", std::move(c)); }
Polynomial S(std::vector<BigRational> c) { return Polynomial("s", std::move(c)); }

// Number of 2x2 matrices over Z/p with determinant 1.
long count_sl2(long p) {
    long n = 0;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d)
                    if (((a * d - b * c) % p + p) % p == 1) ++n;
    return n;
}

constexpr Family kCongruence[] = {Family::SL2_CONG, Family::SL3_CONG, Family::SU3_CONG};

}  // namespace

TEST_SUITE("catalog") {
    TEST_CASE("names round-trip") {
        for (const auto& f : padic_catalog()) {
            CHECK(padic_family_from_name(f.key) == f.id);
            CHECK(padic_family(f.id).key == f.key);
        }
        CHECK(padic_family_from_name("SL3_CONG") == Family::SL3_CONG);
        CHECK(!padic_family_from_name("gl2").has_value());
    }
}

TEST_SUITE("eval_at_int_s") {
    TEST_CASE("SL2(Z_p) values") {
        CHECK(eval_at_int_s(Family::SL2_ZP, 1, 0) == RationalFunction(P({R(-4)}), P({R(-1), R(1)})));
        CHECK(eval_at_int_s(Family::SL2_ZP, 1, -1).is_zero());
        CHECK(eval_at_int_s(Family::SL2_ZP, 1, -2).is_zero());
        CHECK(sl2_zp_part(false, 0) == RationalFunction(P({R(4), R(1)})));
    }

    TEST_CASE("Z_0(-2) is the order of SL2(F_p)") {
        CHECK(sl2_zp_part(false, -2) == RationalFunction(P({R(0), R(-1), R(0), R(1)})));
        for (long p : {3, 5, 7}) {
            CHECK(sl2_zp_part(false, -2).eval(R(p)) == R(count_sl2(p)));
            CHECK(eval_at_int_s(Family::SL2_ZP, 1, -2, R(p)).is_zero());
            CHECK(eval_at_int_s(Family::SL2_ZP, 1, -1, R(p)).is_zero());
        }
    }

    TEST_CASE("SL2 congruence subgroup at s = -1") {
        for (long m : {1, 2, 3}) {
            // -p^{3m+1}/(p+1)
            std::vector<BigRational> num(3 * m + 2, R(0));
            num.back() = R(-1);
            CHECK(eval_at_int_s(Family::SL2_CONG, m, -1) == RationalFunction(P(num), P({R(1), R(1)})));
        }
    }

    TEST_CASE("numeric and symbolic evaluation agree") {
        for (Family f : kCongruence)
            for (long s : {-3, -1, 0, 2})
                for (long p : {5, 7, 11}) {
                    BigRational symbolic = eval_at_int_s(f, 2, s).eval(R(p));
                    CHECK(eval_at_int_s(f, 2, s, R(p)) == symbolic);
                }
    }

    TEST_CASE("hypotheses on p and m") {
        CHECK_THROWS_AS(eval_at_int_s(Family::SL2_ZP, 1, 0, R(4)), ConstraintError);
        CHECK_THROWS_AS(eval_at_int_s(Family::SL2_CONG, 1, 0, R(2)), ConstraintError);
        CHECK_THROWS_AS(eval_at_int_s(Family::SL3_CONG, 1, 0, R(3)), ConstraintError);
        CHECK_THROWS_AS(eval_at_int_s(Family::SU3_CONG, 1, 0, R(3)), ConstraintError);
        CHECK_NOTHROW(eval_at_int_s(Family::SU3_CONG, 1, -1, R(2)));
        CHECK_THROWS_AS(eval_at_int_s(Family::SL3_CONG, 0, -1), DomainError);
    }
}

TEST_SUITE("verify_zero") {
    TEST_CASE("vanishing points") {
        for (long m : {1, 2, 3}) {
            CHECK(verify_zero(Family::SL2_CONG, m, -2).zero);
            CHECK(!verify_zero(Family::SL2_CONG, m, -1).zero);
            CHECK(verify_zero(Family::SL3_CONG, m, -1).zero);
            CHECK(verify_zero(Family::SL3_CONG, m, -2).zero);
            CHECK(verify_zero(Family::SU3_CONG, m, -2).zero);
            CHECK(verify_zero(Family::SU3_CONG, m, 0).zero);
            CHECK(!verify_zero(Family::SU3_CONG, m, -1).zero);
        }
        for (long p : {5, 7, 11}) {
            CHECK(eval_at_int_s(Family::SL3_CONG, 2, -1, R(p)).is_zero());
            CHECK(eval_at_int_s(Family::SU3_CONG, 2, 0, R(p)).is_zero());
        }
    }

    TEST_CASE("SU3 congruence value at s = -1 against [5]_p") {
        for (long m : {1, 2, 3}) {
            RationalFunction v = eval_at_int_s(Family::SU3_CONG, m, -1);
            std::vector<BigRational> mono(8 * m - 1, R(0));
            mono.back() = R(-2);
            CHECK(v * RationalFunction(q_integer(5).with_var("p")) == RationalFunction(P(mono)));
            CHECK(v == -su3_cong_minus1(m));
        }
    }
}

TEST_SUITE("q_integer and su3_cong_minus1") {
    TEST_CASE("values") {
        CHECK(q_integer(5, R(1)) == R(5));
        CHECK(q_integer(5, R(3)) == R(121));
        CHECK(q_integer(1, R(7)) == R(1));
        CHECK(su3_cong_minus1(1, R(3)) == R(1458, 121));
        CHECK(su3_cong_minus1_limit(1) == R(2, 5));
        CHECK(su3_cong_minus1_limit(4) == R(2, 5));
    }
}

TEST_SUITE("absolute_limit") {
    const RationalFunction kSl2(S({R(2), R(1)}), S({R(-1), R(1)}));
    const Polynomial kDen = S({R(-1, 2), R(1)}) * S({R(-2, 3), R(1)});
    const RationalFunction kSl3(S({R(1), R(1)}) * S({R(2), R(1)}), kDen);
    const RationalFunction kSu3(S({R(0), R(1)}) * S({R(2), R(1)}), kDen);

    TEST_CASE("closed forms, independent of the level") {
        for (long m : {1, 2, 5}) {
            CHECK(absolute_limit(Family::SL2_CONG, m) == kSl2);
            CHECK(absolute_limit(Family::SL3_CONG, m) == kSl3);
            CHECK(absolute_limit(Family::SU3_CONG, m) == kSu3);
        }
    }

    TEST_CASE("zeros and poles") {
        for (Family f : kCongruence) CHECK(absolute_limit(f, 1).eval(R(-2)).is_zero());
        CHECK(absolute_limit(Family::SL3_CONG, 1).eval(R(-1)).is_zero());
        CHECK(absolute_limit(Family::SU3_CONG, 1).eval(R(0)).is_zero());
        CHECK(absolute_limit(Family::SL2_CONG, 1).den().eval(R(1)).is_zero());
        for (Family f : {Family::SL3_CONG, Family::SU3_CONG}) {
            CHECK(absolute_limit(f, 1).den().eval(R(1, 2)).is_zero());
            CHECK(absolute_limit(f, 1).den().eval(R(2, 3)).is_zero());
        }
    }

    TEST_CASE("agrees with p -> 1 of the exact values") {
        for (Family f : kCongruence)
            for (long s : {-4, -3, -1}) {
                auto at = [&](long k) {
                    BigRational p = R(1) + BigRational(1) / BigRational(10).pow(k);
                    return eval_at_int_s(f, 2, s, p).to_double();
                };
                double extrapolated = (10 * at(5) - at(4)) / 9;
                double limit = absolute_limit(f, 2).eval(R(s)).to_double();
                CHECK(std::abs(extrapolated - limit) < 1e-6);
            }
    }

    TEST_CASE("errors") { CHECK_THROWS_AS(absolute_limit(Family::SL2_ZP, 1), DomainError); }
}

TEST_SUITE("factorization_check") {
    TEST_CASE("u(X) forms match the factored forms") {
        for (const auto& f : padic_catalog()) {
            if (!f.uform) continue;
            FactorizationResult r = factorization_check(f.id);
            CHECK(r.equal);
            CHECK(r.difference.is_zero());
        }
    }

    TEST_CASE("a perturbed u(X) is detected") {
        for (const auto& f : padic_catalog()) {
            if (!f.uform) continue;
            auto u = f.uform->u;
            u.begin()->second = u.begin()->second + R(1);
            FactorizationResult r = factorization_check(f.id, u);
            CHECK(!r.equal);
            CHECK(!r.difference.is_zero());
        }
    }
}
