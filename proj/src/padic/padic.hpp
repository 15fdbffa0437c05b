#pragma once

#include "exact/laurent2.hpp"
#include "exact/rational_function.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace witten {

// Exponent a + b m + c s of p.
struct AffineExponent {
    long a = 0;
    long b = 0;
    long c = 0;
    long at(long m, long s) const { return a + b * m + c * s; }
    friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

// (1 - sigma p^E)
struct BinomialFactor {
    int sigma = 1;
    AffineExponent e;
};

// sum_j c_j p^{E_j}, in the numerator or denominator.
struct PolyPart {
    std::vector<std::pair<BigRational, AffineExponent>> terms;
    bool numerator = true;
};

struct FactorForm {
    AffineExponent prefactor;
    std::vector<BinomialFactor> num;
    std::vector<BinomialFactor> den;
    std::vector<PolyPart> parts;
};

// sum of multiplicity * dimension^{-s}; rational functions in p.
struct DimensionTerm {
    RationalFunction multiplicity;
    RationalFunction dimension;
};

// finite part + infinite part / (1 - p^{geometric}).
struct DimensionListForm {
    std::vector<DimensionTerm> finite;
    std::vector<DimensionTerm> infinite;
    AffineExponent geometric{1, 0, -1};
};

// p^{prefactor} (1 + u(p) p^{-3-2s} + u(p^{-1}) p^{-2-3s} + p^{-5-5s}) / prod den.
struct UForm {
    std::map<int, BigRational> u;  // exponent of X -> coefficient
    AffineExponent prefactor;
    std::vector<BinomialFactor> den;
};

enum class Family { SL2_ZP, SL2_CONG, SL3_CONG, SU3_CONG };

struct GroupFamily {
    Family id;
    std::string key;          // sl2zp, sl2cong, sl3cong, su3cong
    std::string description;
    std::string hypothesis;   // constraint on numeric p
    std::variant<FactorForm, DimensionListForm> form;
    std::optional<UForm> uform;

    bool uses_level() const { return id != Family::SL2_ZP; }
    // Throws ConstraintError when an integer p violates the hypothesis.
    void check_p(const BigRational& p) const;
};

const std::vector<GroupFamily>& padic_catalog();
const GroupFamily& padic_family(Family id);
// Accepts the key or the enum spelling (e.g. "sl3cong", "SL3_CONG").
std::optional<Family> padic_family_from_name(const std::string& name);

// Exact value at integer s as a reduced rational function in p.
// Throws PoleError at a geometric-factor pole, DomainError for m < 1.
RationalFunction eval_at_int_s(Family family, long m, long s);
// Same at a numeric p (constraints enforced).
BigRational eval_at_int_s(Family family, long m, long s, const BigRational& p);

// SL2(Z_p) pieces: Z_0 (the finite group SL2(F_p)) and Z_infinity.
RationalFunction sl2_zp_part(bool infinite, long s);

struct ZeroCheck {
    bool zero;
    RationalFunction witness;
};
ZeroCheck verify_zero(Family family, long m, long s);

// lim_{p -> 1} as a rational function in s. DegenerateLimitError when the limit is 0 or infinite.
RationalFunction absolute_limit(Family family, long m);

struct FactorizationResult {
    bool equal;
    LaurentPoly2 difference;  // uform numerator * factored denominator - factored numerator * uform denominator
};
// Compares the u(X) form against the factored form in (P, U) = (p, p^{-s}).
// u_override replaces the family's u polynomial (mutation testing).
FactorizationResult factorization_check(Family family,
                                        const std::optional<std::map<int, BigRational>>& u_override = std::nullopt);

// [n]_p = 1 + p + ... + p^{n-1}
Polynomial q_integer(unsigned n);
BigRational q_integer(unsigned n, const BigRational& p);

// 2 p^{8m-2} / [5]_p
RationalFunction su3_cong_minus1(long m);
BigRational su3_cong_minus1(long m, const BigRational& p);
BigRational su3_cong_minus1_limit(long m);

}  // namespace witten
