#include "witten/witten.h"

#include "common/errors.hpp"
#include "exact/bernoulli.hpp"
#include "finite/character_table.hpp"
#include "numerics/gamma.hpp"
#include "numerics/zeta.hpp"
#include "padic/padic.hpp"
#include "polylog/polylog.hpp"
#include "su2/su2.hpp"
#include "su3/su3.hpp"
#include "verify/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

using namespace witten;

struct wz_rational {
    BigRational q;
};

struct wz_ratfunc {
    RationalFunction f;
};

struct wz_table {
    CharacterTable t;
};

struct wz_report {
    std::vector<CheckResult> checks;
};

namespace {

thread_local std::string g_last_error;

wz_status fail(wz_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

// Runs body and maps library exceptions onto status codes.
template <class F>
wz_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return WZ_OK;
    } catch (const PoleError& e) {
        return fail(WZ_ERR_POLE, e.what());
    } catch (const ConvergenceError& e) {
        return fail(WZ_ERR_CONVERGENCE, e.what());
    } catch (const ConditioningError& e) {
        return fail(WZ_ERR_CONDITIONING, e.what());
    } catch (const ParseError& e) {
        return fail(WZ_ERR_PARSE, e.what());
    } catch (const DegenerateLimitError& e) {
        return fail(WZ_ERR_DEGENERATE, e.what());
    } catch (const ConstraintError& e) {
        return fail(WZ_ERR_CONSTRAINT, e.what());
    } catch (const ZeroDivisionError& e) {
        return fail(WZ_ERR_ZERO_DIVISION, e.what());
    } catch (const DomainError& e) {
        return fail(WZ_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(WZ_ERR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(WZ_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(WZ_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Complex cx(wz_complex z) { return {z.re, z.im}; }
wz_complex to_c(Complex z) { return {z.real(), z.imag()}; }
wz_estimate to_c(const Estimate& e) { return {to_c(e.value), e.error}; }

PrecisionBudget budget_of(const wz_budget* b) {
    PrecisionBudget p;
    if (b) {
        p.target = b->target;
        p.max_terms = b->max_terms;
        p.correction_order = b->correction_order;
    }
    p.validate();
    return p;
}

MBParams params_of(const wz_mb_params* m) {
    MBParams p;
    if (m) {
        p.n = m->n;
        p.epsilon = m->epsilon;
        p.height = m->height;
        p.order = m->order;
    }
    p.validate();
    return p;
}

Family family_of(wz_family f) {
    switch (f) {
        case WZ_SL2_ZP: return Family::SL2_ZP;
        case WZ_SL2_CONG: return Family::SL2_CONG;
        case WZ_SL3_CONG: return Family::SL3_CONG;
        case WZ_SU3_CONG: return Family::SU3_CONG;
    }
    throw DomainError("unknown family");
}

#define WZ_REQUIRE(cond)                                                   \
    do {                                                                   \
        if (!(cond)) return fail(WZ_ERR_ARGUMENT, "invalid argument: " #cond); \
    } while (0)

const Polynomial& part_of(const RationalFunction& f, wz_part part, wz_form form, Polynomial& scratch) {
    if (form == WZ_FORM_UNIT_CONSTANT) {
        auto [n, d] = f.unit_constant_form();
        scratch = part == WZ_PART_NUM ? n : d;
        return scratch;
    }
    return part == WZ_PART_NUM ? f.num() : f.den();
}

wz_ratfunc* wrap(RationalFunction f) { return new wz_ratfunc{std::move(f)}; }
wz_rational* wrap(BigRational q) { return new wz_rational{std::move(q)}; }

}  // namespace

extern "C" {

const char* wz_last_error(void) { return g_last_error.c_str(); }

const char* wz_status_name(wz_status status) {
    switch (status) {
        case WZ_OK: return "ok";
        case WZ_ERR_ARGUMENT: return "argument";
        case WZ_ERR_DOMAIN: return "domain";
        case WZ_ERR_POLE: return "pole";
        case WZ_ERR_CONVERGENCE: return "convergence";
        case WZ_ERR_CONDITIONING: return "conditioning";
        case WZ_ERR_PARSE: return "parse";
        case WZ_ERR_DEGENERATE: return "degenerate";
        case WZ_ERR_CONSTRAINT: return "constraint";
        case WZ_ERR_ZERO_DIVISION: return "zero-division";
        case WZ_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* wz_version(void) { return "1.0.0"; }

void wz_string_free(char* s) { std::free(s); }

wz_budget wz_budget_default(void) {
    PrecisionBudget p;
    return {p.target, p.max_terms, p.correction_order};
}

wz_mb_params wz_mb_params_default(void) {
    MBParams p;
    return {p.n, p.epsilon, p.height, p.order};
}

wz_status wz_rational_parse(const char* text, wz_rational** out) {
    WZ_REQUIRE(text && out);
    return guarded([&] { *out = wrap(BigRational::parse(text)); });
}

void wz_rational_free(wz_rational* q) { delete q; }
char* wz_rational_str(const wz_rational* q) { return q ? dup(q->q.str()) : nullptr; }
double wz_rational_to_double(const wz_rational* q) { return q ? q->q.to_double() : 0.0; }
int wz_rational_is_zero(const wz_rational* q) { return q && q->q.is_zero(); }

void wz_ratfunc_free(wz_ratfunc* f) { delete f; }
const char* wz_ratfunc_var(const wz_ratfunc* f) { return f ? f->f.var().c_str() : ""; }
char* wz_ratfunc_str(const wz_ratfunc* f) { return f ? dup(f->f.str()) : nullptr; }
int wz_ratfunc_is_zero(const wz_ratfunc* f) { return f && f->f.is_zero(); }

size_t wz_ratfunc_length(const wz_ratfunc* f, wz_part part, wz_form form) {
    if (!f) return 0;
    Polynomial scratch;
    return part_of(f->f, part, form, scratch).coeffs().size();
}

char* wz_ratfunc_coeff(const wz_ratfunc* f, wz_part part, wz_form form, size_t index) {
    if (!f) return nullptr;
    Polynomial scratch;
    return dup(part_of(f->f, part, form, scratch).coeff(static_cast<unsigned>(index)).short_str());
}

wz_status wz_ratfunc_eval(const wz_ratfunc* f, const char* x, wz_rational** out) {
    WZ_REQUIRE(f && x && out);
    return guarded([&] { *out = wrap(f->f.eval(BigRational::parse(x))); });
}

wz_status wz_riemann_zeta(wz_complex s, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(riemann_zeta(cx(s), budget_of(budget))); });
}

wz_status wz_hurwitz_zeta(wz_complex s, double a, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(hurwitz_zeta(cx(s), a, budget_of(budget))); });
}

wz_status wz_log_gamma(wz_complex z, wz_complex* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(log_gamma(cx(z))); });
}

wz_status wz_bernoulli(unsigned k, wz_rational** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = wrap(bernoulli(k)); });
}

wz_status wz_polylog_series(wz_complex s, double theta, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(polylog_series(cx(s), UnitCirclePoint(theta), budget_of(budget))); });
}

wz_status wz_polylog_continued(wz_complex s, double theta, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(polylog_continued(cx(s), UnitCirclePoint(theta), budget_of(budget))); });
}

wz_status wz_polylog_jonquiere(double s, double theta, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(polylog_via_jonquiere(s, UnitCirclePoint(theta), budget_of(budget))); });
}

wz_status wz_polylog_closed_form(unsigned m, wz_ratfunc** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = wrap(polylog_closed_form(m)); });
}

wz_status wz_polylog_eval_neg(unsigned m, double theta, wz_complex* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(polylog_eval_neg(m, UnitCirclePoint(theta))); });
}

wz_status wz_su2_L(wz_complex s, double theta, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(witten_L_su2(cx(s), ConjugacyClassSU2(theta), budget_of(budget))); });
}

wz_status wz_su2_special_neg_even(int m, double theta, wz_rational** value, char** justification) {
    WZ_REQUIRE(value);
    return guarded([&] {
        SpecialValueZero z = special_value_neg_even(m, ConjugacyClassSU2(theta));
        *value = wrap(z.value);
        if (justification) *justification = dup(z.justification);
    });
}

wz_status wz_su2_special_float(int m, double theta, const wz_budget* budget, double* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = special_value_float_check(m, ConjugacyClassSU2(theta), budget_of(budget)); });
}

wz_status wz_su2_derivative_minus2(double theta, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(derivative_at_minus2(ConjugacyClassSU2(theta), budget_of(budget))); });
}

wz_status wz_su2_multi(wz_complex s, const double* thetas, size_t count, const wz_budget* budget,
                       wz_estimate* out) {
    WZ_REQUIRE(out && thetas);
    return guarded([&] {
        std::vector<ConjugacyClassSU2> gs;
        for (size_t i = 0; i < count; ++i) gs.emplace_back(thetas[i]);
        *out = to_c(multi_L(cx(s), gs, budget_of(budget)));
    });
}

wz_status wz_su2_haar_average(double s, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(haar_average_su2(s, budget_of(budget))); });
}

wz_status wz_su3_mt_series(wz_complex s, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(mt_series(cx(s), budget_of(budget))); });
}

wz_status wz_su3_continued(wz_complex s, const wz_mb_params* params, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(witten_su3_continued(cx(s), params_of(params), budget_of(budget))); });
}

wz_status wz_su3_finite_part(wz_complex s, const wz_mb_params* params, const wz_budget* budget, wz_estimate* out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = to_c(witten_su3_finite_part(cx(s), params_of(params), budget_of(budget))); });
}

int wz_su3_is_pole(wz_complex s) { return su3_is_pole(cx(s)) ? 1 : 0; }

wz_status wz_su3_special_value(int n, wz_rational** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = wrap(special_value_su3(n)); });
}

wz_status wz_su3_convolution_check(int n, wz_rational** lhs, wz_rational** rhs) {
    WZ_REQUIRE(lhs && rhs);
    return guarded([&] {
        ConvolutionCheck c = bernoulli_convolution_check(n);
        *lhs = wrap(c.lhs);
        *rhs = wrap(c.rhs);
    });
}

size_t wz_padic_family_count(void) { return padic_catalog().size(); }

wz_status wz_padic_family_info(size_t index, wz_family* id, const char** key, const char** description,
                               const char** hypothesis) {
    WZ_REQUIRE(index < padic_catalog().size());
    const GroupFamily& g = padic_catalog()[index];
    if (id) *id = static_cast<wz_family>(g.id);
    if (key) *key = g.key.c_str();
    if (description) *description = g.description.c_str();
    if (hypothesis) *hypothesis = g.hypothesis.c_str();
    return WZ_OK;
}

wz_status wz_padic_family_lookup(const char* name, wz_family* out) {
    WZ_REQUIRE(name && out);
    auto f = padic_family_from_name(name);
    if (!f) return fail(WZ_ERR_DOMAIN, std::string("unknown family '") + name + "'");
    *out = static_cast<wz_family>(*f);
    return WZ_OK;
}

wz_status wz_padic_eval(wz_family family, long m, long s, wz_ratfunc** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = wrap(eval_at_int_s(family_of(family), m, s)); });
}

wz_status wz_padic_eval_at(wz_family family, long m, long s, const char* p, wz_rational** out) {
    WZ_REQUIRE(p && out);
    return guarded([&] { *out = wrap(eval_at_int_s(family_of(family), m, s, BigRational::parse(p))); });
}

wz_status wz_padic_sl2_zp_part(int infinite, long s, wz_ratfunc** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = wrap(sl2_zp_part(infinite != 0, s)); });
}

wz_status wz_padic_verify_zero(wz_family family, long m, long s, int* is_zero, wz_ratfunc** witness) {
    WZ_REQUIRE(is_zero);
    return guarded([&] {
        ZeroCheck z = verify_zero(family_of(family), m, s);
        *is_zero = z.zero ? 1 : 0;
        if (witness) *witness = wrap(z.witness);
    });
}

wz_status wz_padic_absolute_limit(wz_family family, long m, wz_ratfunc** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = wrap(absolute_limit(family_of(family), m)); });
}

wz_status wz_padic_factorization_check(wz_family family, int* equal, char** difference) {
    WZ_REQUIRE(equal);
    return guarded([&] {
        FactorizationResult r = factorization_check(family_of(family));
        *equal = r.equal ? 1 : 0;
        if (difference) *difference = dup(r.difference.is_zero() ? "0" : r.difference.str());
    });
}

wz_status wz_padic_q_integer(unsigned n, wz_ratfunc** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = wrap(RationalFunction(q_integer(n))); });
}

wz_status wz_padic_su3_minus1(long m, wz_ratfunc** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = wrap(su3_cong_minus1(m)); });
}

wz_status wz_padic_su3_minus1_limit(long m, wz_rational** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = wrap(su3_cong_minus1_limit(m)); });
}

wz_status wz_table_builtin(const char* name, wz_table** out) {
    WZ_REQUIRE(name && out);
    return guarded([&] { *out = new wz_table{CharacterTable::builtin(name)}; });
}

wz_status wz_table_load(const char* path, wz_table** out) {
    WZ_REQUIRE(path && out);
    return guarded([&] { *out = new wz_table{CharacterTable::load(path)}; });
}

wz_status wz_table_parse(const char* text, wz_table** out) {
    WZ_REQUIRE(text && out);
    return guarded([&] { *out = new wz_table{CharacterTable::parse(text)}; });
}

void wz_table_free(wz_table* t) { delete t; }
const char* wz_table_name(const wz_table* t) { return t ? t->t.name().c_str() : ""; }
long wz_table_order(const wz_table* t) { return t ? t->t.order() : 0; }
size_t wz_table_class_count(const wz_table* t) { return t ? t->t.classes().size() : 0; }

const char* wz_table_class_label(const wz_table* t, size_t index) {
    if (!t || index >= t->t.classes().size()) return nullptr;
    return t->t.classes()[index].label.c_str();
}

int wz_table_identity_class(const wz_table* t) { return t ? t->t.identity_class() : -1; }

wz_status wz_finite_L(const wz_table* t, wz_complex s, size_t class_index, wz_complex* out) {
    WZ_REQUIRE(t && out && class_index < t->t.classes().size());
    return guarded([&] { *out = to_c(finite_witten_L(t->t, cx(s), static_cast<int>(class_index))); });
}

wz_status wz_finite_L_exact(const wz_table* t, long s, size_t class_index, char** out) {
    WZ_REQUIRE(t && out && class_index < t->t.classes().size());
    return guarded([&] { *out = dup(finite_witten_L_exact(t->t, s, static_cast<int>(class_index)).str()); });
}

wz_status wz_finite_average(const wz_table* t, wz_complex s, wz_complex* out) {
    WZ_REQUIRE(t && out);
    return guarded([&] { *out = to_c(haar_average_finite(t->t, cx(s))); });
}

wz_status wz_finite_average_exact(const wz_table* t, long s, char** out) {
    WZ_REQUIRE(t && out);
    return guarded([&] { *out = dup(haar_average_finite_exact(t->t, s).str()); });
}

wz_status wz_verify_suite(const char* suite, wz_report** out) {
    WZ_REQUIRE(suite && out);
    return guarded([&] { *out = new wz_report{run_suite(suite)}; });
}

wz_status wz_verify_criterion(int criterion, wz_report** out) {
    WZ_REQUIRE(out);
    return guarded([&] { *out = new wz_report{run_criterion(criterion)}; });
}

int wz_criterion_count(void) { return kCriterionCount; }

const char* wz_criterion_title(int criterion) {
    static const std::vector<std::string> titles = [] {
        std::vector<std::string> t;
        for (int k = 1; k <= kCriterionCount; ++k) t.push_back(criterion_title(k));
        return t;
    }();
    if (criterion < 1 || criterion > kCriterionCount) return nullptr;
    return titles[criterion - 1].c_str();
}

size_t wz_report_count(const wz_report* r) { return r ? r->checks.size() : 0; }

wz_status wz_report_check(const wz_report* r, size_t index, wz_check* out) {
    WZ_REQUIRE(r && out && index < r->checks.size());
    const CheckResult& c = r->checks[index];
    *out = {c.criterion, c.pass ? 1 : 0, c.suite.c_str(), c.name.c_str(),
            c.observed.c_str(), c.expected.c_str(), c.tolerance.c_str()};
    return WZ_OK;
}

int wz_report_all_passed(const wz_report* r) {
    if (!r) return 0;
    for (const auto& c : r->checks)
        if (!c.pass) return 0;
    return 1;
}

void wz_report_free(wz_report* r) { delete r; }

}  // extern "C"
