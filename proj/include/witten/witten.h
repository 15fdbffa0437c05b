#ifndef WITTEN_WITTEN_H
#define WITTEN_WITTEN_H

#include <stddef.h>

#if defined(_WIN32)
#define WZ_API __declspec(dllexport)
#else
#define WZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    WZ_OK = 0,
    WZ_ERR_ARGUMENT,      /* null pointer, bad index, malformed parameter */
    WZ_ERR_DOMAIN,        /* value outside the operation's domain */
    WZ_ERR_POLE,          /* evaluation at or near a pole */
    WZ_ERR_CONVERGENCE,   /* budget exhausted */
    WZ_ERR_CONDITIONING,  /* ill-conditioned solve */
    WZ_ERR_PARSE,         /* character-table or number syntax */
    WZ_ERR_DEGENERATE,    /* p -> 1 limit is 0 or infinite */
    WZ_ERR_CONSTRAINT,    /* p violates the family's hypothesis */
    WZ_ERR_ZERO_DIVISION,
    WZ_ERR_INTERNAL
} wz_status;

/* Message of the last failed call on this thread ("" if none). */
WZ_API const char* wz_last_error(void);
WZ_API const char* wz_status_name(wz_status status);
WZ_API const char* wz_version(void);

/* Strings returned through char** are owned by the caller. */
WZ_API void wz_string_free(char* s);

typedef struct {
    double re;
    double im;
} wz_complex;

typedef struct {
    wz_complex value;
    double error;
} wz_estimate;

typedef struct {
    double target;        /* relative error goal */
    int max_terms;
    int correction_order;
} wz_budget;

WZ_API wz_budget wz_budget_default(void);

typedef struct {
    int n;           /* strip selector, M = 2n + 2 */
    double epsilon;  /* in (0, 1) */
    double height;   /* contour half-height; 0 selects the default */
    int order;       /* Gauss-Legendre points per panel */
} wz_mb_params;

WZ_API wz_mb_params wz_mb_params_default(void);

/* Exact rationals */
typedef struct wz_rational wz_rational;

WZ_API wz_status wz_rational_parse(const char* text, wz_rational** out);
WZ_API void wz_rational_free(wz_rational* q);
WZ_API char* wz_rational_str(const wz_rational* q);
WZ_API double wz_rational_to_double(const wz_rational* q);
WZ_API int wz_rational_is_zero(const wz_rational* q);

/* Rational functions in one variable */
typedef struct wz_ratfunc wz_ratfunc;

typedef enum {
    WZ_FORM_MONIC = 0,          /* monic denominator */
    WZ_FORM_UNIT_CONSTANT = 1   /* denominator constant term 1 */
} wz_form;

typedef enum { WZ_PART_NUM = 0, WZ_PART_DEN = 1 } wz_part;

WZ_API void wz_ratfunc_free(wz_ratfunc* f);
WZ_API const char* wz_ratfunc_var(const wz_ratfunc* f);
WZ_API char* wz_ratfunc_str(const wz_ratfunc* f);
WZ_API int wz_ratfunc_is_zero(const wz_ratfunc* f);
/* Number of coefficients (degree + 1; 0 for the zero polynomial). */
WZ_API size_t wz_ratfunc_length(const wz_ratfunc* f, wz_part part, wz_form form);
/* Coefficient of var^index as "a/b" or "a". */
WZ_API char* wz_ratfunc_coeff(const wz_ratfunc* f, wz_part part, wz_form form, size_t index);
WZ_API wz_status wz_ratfunc_eval(const wz_ratfunc* f, const char* x, wz_rational** out);

/* Zeta and gamma */
WZ_API wz_status wz_riemann_zeta(wz_complex s, const wz_budget* budget, wz_estimate* out);
WZ_API wz_status wz_hurwitz_zeta(wz_complex s, double a, const wz_budget* budget, wz_estimate* out);
WZ_API wz_status wz_log_gamma(wz_complex z, wz_complex* out);
WZ_API wz_status wz_bernoulli(unsigned k, wz_rational** out);

/* Unit-circle polylogarithm Z(s, e^{i theta}); budget may be NULL. */
WZ_API wz_status wz_polylog_series(wz_complex s, double theta, const wz_budget* budget, wz_estimate* out);
WZ_API wz_status wz_polylog_continued(wz_complex s, double theta, const wz_budget* budget, wz_estimate* out);
WZ_API wz_status wz_polylog_jonquiere(double s, double theta, const wz_budget* budget, wz_estimate* out);
WZ_API wz_status wz_polylog_closed_form(unsigned m, wz_ratfunc** out);
WZ_API wz_status wz_polylog_eval_neg(unsigned m, double theta, wz_complex* out);

/* SU(2) */
WZ_API wz_status wz_su2_L(wz_complex s, double theta, const wz_budget* budget, wz_estimate* out);
/* Exact zero at s = -m, m even >= 2; justification may be NULL. */
WZ_API wz_status wz_su2_special_neg_even(int m, double theta, wz_rational** value, char** justification);
WZ_API wz_status wz_su2_special_float(int m, double theta, const wz_budget* budget, double* out);
WZ_API wz_status wz_su2_derivative_minus2(double theta, const wz_budget* budget, wz_estimate* out);
WZ_API wz_status wz_su2_multi(wz_complex s, const double* thetas, size_t count, const wz_budget* budget,
                              wz_estimate* out);
WZ_API wz_status wz_su2_haar_average(double s, const wz_budget* budget, wz_estimate* out);

/* SU(3) */
WZ_API wz_status wz_su3_mt_series(wz_complex s, const wz_budget* budget, wz_estimate* out);
WZ_API wz_status wz_su3_continued(wz_complex s, const wz_mb_params* params, const wz_budget* budget,
                                  wz_estimate* out);
WZ_API wz_status wz_su3_finite_part(wz_complex s, const wz_mb_params* params, const wz_budget* budget,
                                    wz_estimate* out);
WZ_API int wz_su3_is_pole(wz_complex s);
WZ_API wz_status wz_su3_special_value(int n, wz_rational** out);
WZ_API wz_status wz_su3_convolution_check(int n, wz_rational** lhs, wz_rational** rhs);

/* p-adic families */
typedef enum { WZ_SL2_ZP = 0, WZ_SL2_CONG, WZ_SL3_CONG, WZ_SU3_CONG } wz_family;

WZ_API size_t wz_padic_family_count(void);
/* Pointers stay valid for the life of the process. */
WZ_API wz_status wz_padic_family_info(size_t index, wz_family* id, const char** key, const char** description,
                                      const char** hypothesis);
WZ_API wz_status wz_padic_family_lookup(const char* name, wz_family* out);
WZ_API wz_status wz_padic_eval(wz_family family, long m, long s, wz_ratfunc** out);
WZ_API wz_status wz_padic_eval_at(wz_family family, long m, long s, const char* p, wz_rational** out);
WZ_API wz_status wz_padic_sl2_zp_part(int infinite, long s, wz_ratfunc** out);
WZ_API wz_status wz_padic_verify_zero(wz_family family, long m, long s, int* is_zero, wz_ratfunc** witness);
WZ_API wz_status wz_padic_absolute_limit(wz_family family, long m, wz_ratfunc** out);
/* difference may be NULL; it receives "0" when the forms agree. */
WZ_API wz_status wz_padic_factorization_check(wz_family family, int* equal, char** difference);
WZ_API wz_status wz_padic_q_integer(unsigned n, wz_ratfunc** out);
WZ_API wz_status wz_padic_su3_minus1(long m, wz_ratfunc** out);
WZ_API wz_status wz_padic_su3_minus1_limit(long m, wz_rational** out);

/* Finite groups */
typedef struct wz_table wz_table;

WZ_API wz_status wz_table_builtin(const char* name, wz_table** out);
WZ_API wz_status wz_table_load(const char* path, wz_table** out);
WZ_API wz_status wz_table_parse(const char* text, wz_table** out);
WZ_API void wz_table_free(wz_table* t);
WZ_API const char* wz_table_name(const wz_table* t);
WZ_API long wz_table_order(const wz_table* t);
WZ_API size_t wz_table_class_count(const wz_table* t);
WZ_API const char* wz_table_class_label(const wz_table* t, size_t index);
WZ_API int wz_table_identity_class(const wz_table* t);
WZ_API wz_status wz_finite_L(const wz_table* t, wz_complex s, size_t class_index, wz_complex* out);
/* Exact Gaussian rational "a/b+c/di" for integer s. */
WZ_API wz_status wz_finite_L_exact(const wz_table* t, long s, size_t class_index, char** out);
WZ_API wz_status wz_finite_average(const wz_table* t, wz_complex s, wz_complex* out);
WZ_API wz_status wz_finite_average_exact(const wz_table* t, long s, char** out);

/* Verification suites */
typedef struct wz_report wz_report;

typedef struct {
    int criterion;  /* 1..14, or 0 for supplementary checks */
    int pass;
    const char* suite;
    const char* name;
    const char* observed;
    const char* expected;
    const char* tolerance;
} wz_check;

/* suite: all, core, polylog, su2, su3, padic */
WZ_API wz_status wz_verify_suite(const char* suite, wz_report** out);
WZ_API wz_status wz_verify_criterion(int criterion, wz_report** out);
WZ_API int wz_criterion_count(void);
WZ_API const char* wz_criterion_title(int criterion);
WZ_API size_t wz_report_count(const wz_report* r);
/* Strings stay valid until wz_report_free. */
WZ_API wz_status wz_report_check(const wz_report* r, size_t index, wz_check* out);
WZ_API int wz_report_all_passed(const wz_report* r);
WZ_API void wz_report_free(wz_report* r);

#ifdef __cplusplus
}
#endif

#endif
