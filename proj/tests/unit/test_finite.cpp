#include <doctest.h>

#include "common/errors.hpp"
#include "finite/character_table.hpp"

#include <random>

using namespace witten;

namespace {

GaussianRational gr(long re, long im = 0) { return {BigRational(re), BigRational(im)}; }

}  // namespace

TEST_SUITE("gaussian_rational") {
    TEST_CASE("parse") {
        CHECK(GaussianRational::parse("i") == gr(0, 1));
        CHECK(GaussianRational::parse("-i") == gr(0, -1));
        CHECK(GaussianRational::parse("1/2-3/4i") == GaussianRational{BigRational(1, 2), BigRational(-3, 4)});
        CHECK(GaussianRational::parse("-5") == gr(-5));
        CHECK_THROWS(GaussianRational::parse("1+"));
        CHECK_THROWS(GaussianRational::parse("x"));
    }
}

TEST_SUITE("character_table") {
    TEST_CASE("built-in tables") {
        for (const char* name : {"s3", "q8"}) {
            CharacterTable t = CharacterTable::builtin(name);
            CHECK(t.identity_class() == 0);
            long total = 0;
            for (const auto& c : t.classes()) total += c.size;
            CHECK(total == t.order());
        }
        CHECK_THROWS_AS(CharacterTable::builtin("a5"), DomainError);
    }

    TEST_CASE("parse reports the offending line") {
        // Cube roots of unity are not Gaussian rationals; these rows cannot be orthogonal.
        const std::string bad_c3 = "# cyclic group of order 3\ngroup C3 3\nclasses 1 1 1\n"
                                   "irrep 1 1 1 1\nirrep 1 1 -1/2+1/2i -1/2-1/2i\nirrep 1 1 -1/2-1/2i -1/2+1/2i\n";
        const std::string z4 = "group C4 4\nclasses 1 1 1 1\nirrep 1 1 1 1 1\nirrep 1 1 i -1 -i\n"
                               "irrep 1 1 -1 1 -1\nirrep 1 1 -i -1 i\n";
        CharacterTable t = CharacterTable::parse(z4);
        CHECK(t.order() == 4);
        CHECK(t.classes()[2].label == "C3");
        try {
            CharacterTable::parse(bad_c3);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 5);  // first row breaking orthogonality
        }
        try {
            CharacterTable::parse("group G 2\nclasses 1 1\nirrep 1 1 1\nbogus\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
        }
        CHECK_THROWS_AS(CharacterTable::parse("group G 2\nclasses 1 2\n"), ParseError);
        CHECK_THROWS_AS(CharacterTable::parse("classes 1\n"), ParseError);
    }

    TEST_CASE("constructor validates invariants") {
        CHECK_THROWS_AS(CharacterTable("G", 2, {{"e", 1}, {"g", 1}}, {{1, {gr(1), gr(1)}}, {1, {gr(1), gr(1)}}}),
                        DomainError);
    }
}

TEST_SUITE("finite_witten_L") {
    TEST_CASE("zeta_W(-2, g) = |G| [g = 1]") {
        for (const char* name : {"s3", "q8"}) {
            CharacterTable t = CharacterTable::builtin(name);
            for (size_t c = 0; c < t.classes().size(); ++c) {
                long expected = static_cast<int>(c) == t.identity_class() ? t.order() : 0;
                CHECK(finite_witten_L_exact(t, -2, static_cast<int>(c)) == gr(expected));
                CHECK(std::abs(finite_witten_L(t, -2.0, static_cast<int>(c)) - Complex(expected)) < 1e-12);
            }
        }
    }

    TEST_CASE("examples") {
        CharacterTable q8 = CharacterTable::q8();
        CHECK(finite_witten_L_exact(q8, 0, 0) == GaussianRational{BigRational(5), BigRational()});
        CHECK(haar_average_finite_exact(CharacterTable::s3(), -2) == gr(1));
        CHECK(std::abs(haar_average_finite(CharacterTable::s3(), 3.7) - 1.0) < 1e-12);
        CHECK(haar_average_finite_exact(q8, -1) == gr(1));
    }

    TEST_CASE("Haar average is 1 at random complex s") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> u(-10, 10);
        for (const char* name : {"s3", "q8"}) {
            CharacterTable t = CharacterTable::builtin(name);
            for (int i = 0; i < 10; ++i) CHECK(std::abs(haar_average_finite(t, {u(rng), u(rng)}) - 1.0) < 1e-12);
        }
    }
}
