#include "padic/padic.hpp"

#include "common/errors.hpp"

#include <algorithm>
#include <cctype>

namespace witten {
namespace {

const std::string kP = "p";
const std::string kS = "s";

RationalFunction p_power(long e) {
    if (e >= 0) return RationalFunction(Polynomial::monomial(BigRational(1), static_cast<unsigned>(e), kP));
    return RationalFunction(Polynomial::constant(BigRational(1), kP),
                            Polynomial::monomial(BigRational(1), static_cast<unsigned>(-e), kP));
}

RationalFunction rf_const(long c) { return RationalFunction::constant(BigRational(c), kP); }

// Polynomial in p from integer coefficients, constant term first.
RationalFunction poly_p(std::initializer_list<long> coeffs, long den = 1) {
    std::vector<BigRational> c;
    for (long v : coeffs) c.emplace_back(BigRational(v) / BigRational(den));
    return RationalFunction(Polynomial(kP, std::move(c)));
}

RationalFunction binomial_value(const BinomialFactor& f, long m, long s) {
    RationalFunction one = rf_const(1);
    RationalFunction t = p_power(f.e.at(m, s));
    return f.sigma > 0 ? one - t : one + t;
}

RationalFunction poly_part_value(const PolyPart& part, long m, long s) {
    RationalFunction sum(kP);
    for (const auto& [c, e] : part.terms) sum = sum + RationalFunction::constant(c, kP) * p_power(e.at(m, s));
    return sum;
}

void check_level(const GroupFamily& g, long m) {
    if (g.uses_level() && m < 1) throw DomainError("level m must be a positive integer");
}

RationalFunction eval_factor_form(const FactorForm& f, long m, long s) {
    RationalFunction num = p_power(f.prefactor.at(m, s));
    RationalFunction den = rf_const(1);
    for (const auto& b : f.num) num = num * binomial_value(b, m, s);
    for (const auto& b : f.den) {
        RationalFunction v = binomial_value(b, m, s);
        if (v.is_zero()) throw PoleError("geometric-factor pole at s = " + std::to_string(s), double(s));
        den = den * v;
    }
    for (const auto& part : f.parts) {
        RationalFunction v = poly_part_value(part, m, s);
        if (part.numerator) {
            num = num * v;
        } else {
            if (v.is_zero()) throw PoleError("vanishing denominator at s = " + std::to_string(s), double(s));
            den = den * v;
        }
    }
    if (num.is_zero()) return RationalFunction(kP);
    return num / den;
}

RationalFunction dimension_sum(const std::vector<DimensionTerm>& terms, long s) {
    RationalFunction sum(kP);
    for (const auto& t : terms) sum = sum + t.multiplicity * t.dimension.pow(static_cast<int>(-s));
    return sum;
}

RationalFunction eval_dimension_form(const DimensionListForm& f, long m, long s) {
    RationalFunction geo = rf_const(1) - p_power(f.geometric.at(m, s));
    if (geo.is_zero()) throw PoleError("geometric-factor pole at s = " + std::to_string(s), double(s));
    return dimension_sum(f.finite, s) + dimension_sum(f.infinite, s) / geo;
}

// p^{a + c s} -> P^a U^{-c} with U = p^{-s}; level terms are dropped (identical on both sides).
LaurentPoly2 lp_power(const AffineExponent& e, const BigRational& coeff = BigRational(1)) {
    return LaurentPoly2::monomial(coeff, static_cast<int>(e.a), static_cast<int>(-e.c));
}

LaurentPoly2 lp_binomial(const BinomialFactor& f) {
    return LaurentPoly2::constant(BigRational(1)) - lp_power(f.e, BigRational(f.sigma));
}

LaurentPoly2 lp_product(const std::vector<BinomialFactor>& fs) {
    LaurentPoly2 r = LaurentPoly2::constant(BigRational(1));
    for (const auto& f : fs) r = r * lp_binomial(f);
    return r;
}

LaurentPoly2 lp_part(const PolyPart& part) {
    LaurentPoly2 r;
    for (const auto& [c, e] : part.terms) r = r + lp_power(e, c);
    return r;
}

FactorForm sl2_cong_form() {
    FactorForm f;
    f.prefactor = {2, 3, 0};
    f.num = {{1, {-2, 0, -1}}};
    f.den = {{1, {1, 0, -1}}};
    return f;
}

std::vector<BinomialFactor> rank2_denominator() { return {{1, {1, 0, -2}}, {1, {2, 0, -3}}}; }

FactorForm sl3_cong_form() {
    FactorForm f;
    f.prefactor = {0, 8, 0};
    f.num = {{1, {-2, 0, -1}}, {1, {-1, 0, -1}}};
    f.den = rank2_denominator();
    PolyPart part;
    for (AffineExponent e : {AffineExponent{0, 0, 0}, {-1, 0, -1}, {-2, 0, -1}, {0, 0, -2}, {-1, 0, -2}, {-2, 0, -3}})
        part.terms.emplace_back(BigRational(1), e);
    f.parts = {part};
    return f;
}

FactorForm su3_cong_form() {
    FactorForm f;
    f.prefactor = {0, 8, 0};
    f.num = {{1, {-2, 0, -1}}, {1, {0, 0, -1}}, {-1, {-1, 0, -1}}};
    f.den = rank2_denominator();
    PolyPart part;
    part.terms = {{BigRational(1), {0, 0, 0}},
                  {BigRational(1), {0, 0, -1}},
                  {BigRational(-1), {-1, 0, -1}},
                  {BigRational(1), {-2, 0, -1}},
                  {BigRational(1), {-2, 0, -2}}};
    f.parts = {part};
    return f;
}

UForm rank2_uform(std::map<int, BigRational> u) {
    UForm uf;
    uf.u = std::move(u);
    uf.prefactor = {0, 8, 0};
    uf.den = rank2_denominator();
    return uf;
}

DimensionListForm sl2_zp_form() {
    DimensionListForm f;
    RationalFunction one = rf_const(1);
    f.finite = {
        {one, one},
        {rf_const(2), poly_p({-1, 1}, 2)},
        {rf_const(2), poly_p({1, 1}, 2)},
        {poly_p({-1, 1}, 2), poly_p({-1, 1})},
        {one, poly_p({0, 1})},
        {poly_p({-3, 1}, 2), poly_p({1, 1})},
    };
    f.infinite = {
        {poly_p({0, 4}), poly_p({-1, 0, 1}, 2)},
        {poly_p({-1, 0, 1}, 2), poly_p({0, -1, 1})},
        {poly_p({1, -2, 1}, 2), poly_p({0, 1, 1})},
    };
    return f;
}

std::vector<GroupFamily> build_catalog() {
    std::vector<GroupFamily> c;
    c.push_back({Family::SL2_ZP, "sl2zp", "SL2(Z_p)", "p odd", sl2_zp_form(), std::nullopt});
    c.push_back({Family::SL2_CONG, "sl2cong", "SL2(Z_p)[p^m] congruence subgroup", "p odd", sl2_cong_form(),
                 std::nullopt});
    c.push_back({Family::SL3_CONG, "sl3cong", "SL3(Z_p)[p^m] congruence subgroup", "p != 3", sl3_cong_form(),
                 rank2_uform({{3, BigRational(1)}, {2, BigRational(1)}, {1, BigRational(-1)}, {0, BigRational(-1)},
                              {-1, BigRational(-1)}})});
    c.push_back({Family::SU3_CONG, "su3cong", "SU3(Z_p)[p^m] congruence subgroup", "p != 3", su3_cong_form(),
                 rank2_uform({{3, BigRational(-1)}, {2, BigRational(1)}, {1, BigRational(-1)}, {0, BigRational(1)},
                              {-1, BigRational(-1)}})});
    return c;
}

}  // namespace

void GroupFamily::check_p(const BigRational& p) const {
    if (!p.is_integer()) return;
    bool sl2 = id == Family::SL2_ZP || id == Family::SL2_CONG;
    if (sl2 && mpz_even_p(p.numerator().get_mpz_t()))
        throw ConstraintError(key + " requires " + hypothesis + ", got p = " + p.short_str());
    if (!sl2 && p == BigRational(3)) throw ConstraintError(key + " requires " + hypothesis + ", got p = 3");
}

const std::vector<GroupFamily>& padic_catalog() {
    static const std::vector<GroupFamily> catalog = build_catalog();
    return catalog;
}

const GroupFamily& padic_family(Family id) {
    for (const auto& g : padic_catalog())
        if (g.id == id) return g;
    throw DomainError("unknown family");
}

std::optional<Family> padic_family_from_name(const std::string& name) {
    std::string k;
    for (char ch : name)
        if (ch != '_' && ch != '-') k.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    for (const auto& g : padic_catalog())
        if (g.key == k) return g.id;
    return std::nullopt;
}

RationalFunction eval_at_int_s(Family family, long m, long s) {
    const GroupFamily& g = padic_family(family);
    check_level(g, m);
    if (const auto* f = std::get_if<FactorForm>(&g.form)) return eval_factor_form(*f, m, s);
    return eval_dimension_form(std::get<DimensionListForm>(g.form), m, s);
}

BigRational eval_at_int_s(Family family, long m, long s, const BigRational& p) {
    padic_family(family).check_p(p);
    return eval_at_int_s(family, m, s).eval(p);
}

RationalFunction sl2_zp_part(bool infinite, long s) {
    const auto& f = std::get<DimensionListForm>(padic_family(Family::SL2_ZP).form);
    if (!infinite) return dimension_sum(f.finite, s);
    RationalFunction geo = rf_const(1) - p_power(f.geometric.at(0, s));
    if (geo.is_zero()) throw PoleError("geometric-factor pole at s = " + std::to_string(s), double(s));
    return dimension_sum(f.infinite, s) / geo;
}

ZeroCheck verify_zero(Family family, long m, long s) {
    RationalFunction w = eval_at_int_s(family, m, s);
    return {w.is_zero(), w};
}

RationalFunction absolute_limit(Family family, long m) {
    const GroupFamily& g = padic_family(family);
    check_level(g, m);
    const auto* f = std::get_if<FactorForm>(&g.form);
    if (!f) throw DomainError(g.key + " has no factored form; absolute limit unavailable");

    RationalFunction num = RationalFunction::constant(BigRational(1), kS);
    RationalFunction den = RationalFunction::constant(BigRational(1), kS);
    int vanishing = 0;
    auto apply = [&](const BinomialFactor& b, RationalFunction& acc, int sign) {
        if (b.sigma < 0) {
            acc = acc * RationalFunction::constant(BigRational(2), kS);
            return;
        }
        // (1 - p^{alpha + c s}) ~ -(alpha + c s)(p - 1)
        Polynomial lin(kS, {BigRational(-(b.e.a + b.e.b * m)), BigRational(-b.e.c)});
        if (lin.is_zero()) throw DegenerateLimitError("factor vanishes identically");
        acc = acc * RationalFunction(lin);
        vanishing += sign;
    };
    for (const auto& b : f->num) apply(b, num, +1);
    for (const auto& b : f->den) apply(b, den, -1);
    if (vanishing != 0)
        throw DegenerateLimitError(vanishing > 0 ? "limit is 0: numerator has more vanishing factors"
                                                 : "limit is infinite: denominator has more vanishing factors");
    for (const auto& part : f->parts) {
        BigRational sum;
        for (const auto& t : part.terms) sum = sum + t.first;
        if (sum.is_zero()) throw DegenerateLimitError("polynomial part vanishes at p = 1");
        (part.numerator ? num : den) = (part.numerator ? num : den) * RationalFunction::constant(sum, kS);
    }
    return num / den;
}

FactorizationResult factorization_check(Family family, const std::optional<std::map<int, BigRational>>& u_override) {
    const GroupFamily& g = padic_family(family);
    const auto* f = std::get_if<FactorForm>(&g.form);
    if (!f || !g.uform) throw DomainError(g.key + " has no u(X) form");
    const UForm& uf = *g.uform;
    const auto& u = u_override ? *u_override : uf.u;

    // 1 + u(P) P^{-3} U^2 + u(1/P) P^{-2} U^3 + P^{-5} U^5
    LaurentPoly2 nu = LaurentPoly2::constant(BigRational(1)) + LaurentPoly2::monomial(BigRational(1), -5, 5);
    for (const auto& [k, c] : u) {
        nu.add_term(c, k - 3, 2);
        nu.add_term(c, -k - 2, 3);
    }
    LaurentPoly2 du = lp_product(uf.den);

    LaurentPoly2 nf = lp_product(f->num);
    LaurentPoly2 df = lp_product(f->den);
    for (const auto& part : f->parts) (part.numerator ? nf : df) = (part.numerator ? nf : df) * lp_part(part);

    // Prefactors p^{bm} are common; constant offsets move into the comparison.
    LaurentPoly2 lhs = nu * df * lp_power({uf.prefactor.a, 0, uf.prefactor.c});
    LaurentPoly2 rhs = nf * du * lp_power({f->prefactor.a, 0, f->prefactor.c});
    bool same_level = uf.prefactor.b == f->prefactor.b;
    LaurentPoly2 diff = lhs - rhs;
    return {same_level && diff.is_zero(), diff};
}

Polynomial q_integer(unsigned n) {
    if (n == 0) throw DomainError("q-integer needs n >= 1");
    return Polynomial(kP, std::vector<BigRational>(n, BigRational(1)));
}

BigRational q_integer(unsigned n, const BigRational& p) { return q_integer(n).eval(p); }

RationalFunction su3_cong_minus1(long m) {
    if (m < 1) throw DomainError("level m must be a positive integer");
    return RationalFunction::constant(BigRational(2), kP) * p_power(8 * m - 2) / RationalFunction(q_integer(5));
}

BigRational su3_cong_minus1(long m, const BigRational& p) {
    if (p == BigRational(1)) throw DomainError("p = 1 is a limit; use su3_cong_minus1_limit");
    return su3_cong_minus1(m).eval(p);
}

BigRational su3_cong_minus1_limit(long m) {
    if (m < 1) throw DomainError("level m must be a positive integer");
    return BigRational(2) / q_integer(5, BigRational(1));
}

}  // namespace witten
