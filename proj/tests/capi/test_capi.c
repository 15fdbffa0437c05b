/* Plain C client of the public header. */
#include "witten/witten.h"

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                    \
    do {                                                                \
        if (!(cond)) {                                                  \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                 \
        }                                                               \
    } while (0)

static const double PI = 3.14159265358979323846;

static void test_status_codes(void) {
    wz_estimate e;
    wz_budget b = wz_budget_default();
    wz_complex one = {1.0, 0.0};
    wz_complex s = {-1.0, 0.0};
    wz_ratfunc* f = NULL;
    wz_rational* q = NULL;

    EXPECT(wz_riemann_zeta(one, NULL, &e) == WZ_ERR_POLE);
    EXPECT(strlen(wz_last_error()) > 0);
    EXPECT(wz_riemann_zeta(s, NULL, NULL) == WZ_ERR_ARGUMENT);
    EXPECT(wz_polylog_continued(s, 0.0, NULL, &e) == WZ_ERR_DOMAIN);
    EXPECT(wz_padic_eval_at(WZ_SL2_ZP, 1, 0, "2", &q) == WZ_ERR_CONSTRAINT);
    EXPECT(wz_padic_absolute_limit(WZ_SL2_ZP, 1, &f) == WZ_ERR_DOMAIN);
    EXPECT(wz_polylog_jonquiere(2.0, 1.0, NULL, &e) == WZ_ERR_CONDITIONING);
    b.target = 0.0;
    EXPECT(wz_riemann_zeta(s, &b, &e) == WZ_ERR_DOMAIN);
    EXPECT(wz_riemann_zeta(s, NULL, &e) == WZ_OK);
    EXPECT(strcmp(wz_last_error(), "") == 0);
    EXPECT(fabs(e.value.re + 1.0 / 12) < 1e-14);
    EXPECT(strcmp(wz_status_name(WZ_ERR_POLE), "pole") == 0);
}

static void test_polylog(void) {
    wz_ratfunc* f = NULL;
    wz_complex v;
    wz_estimate e;
    wz_complex s = {3.0, 0.0};
    char* c;
    size_t i;
    const char* num[] = {"0", "1", "1"};
    const char* den[] = {"1", "-3", "3", "-1"};

    EXPECT(wz_polylog_closed_form(2, &f) == WZ_OK);
    EXPECT(strcmp(wz_ratfunc_var(f), "x") == 0);
    EXPECT(wz_ratfunc_length(f, WZ_PART_NUM, WZ_FORM_UNIT_CONSTANT) == 3);
    EXPECT(wz_ratfunc_length(f, WZ_PART_DEN, WZ_FORM_UNIT_CONSTANT) == 4);
    for (i = 0; i < 3; ++i) {
        c = wz_ratfunc_coeff(f, WZ_PART_NUM, WZ_FORM_UNIT_CONSTANT, i);
        EXPECT(strcmp(c, num[i]) == 0);
        wz_string_free(c);
    }
    for (i = 0; i < 4; ++i) {
        c = wz_ratfunc_coeff(f, WZ_PART_DEN, WZ_FORM_UNIT_CONSTANT, i);
        EXPECT(strcmp(c, den[i]) == 0);
        wz_string_free(c);
    }
    wz_ratfunc_free(f);

    EXPECT(wz_polylog_eval_neg(1, PI, &v) == WZ_OK);
    EXPECT(fabs(v.re + 0.25) < 1e-15 && v.im == 0.0);
    EXPECT(wz_polylog_series(s, PI, NULL, &e) == WZ_OK);
    EXPECT(fabs(e.value.re + 0.75 * 1.2020569031595942854) < 1e-12);
}

static void test_su2_su3(void) {
    wz_estimate e;
    wz_rational* q = NULL;
    wz_rational* r = NULL;
    char* why = NULL;
    char* str;
    double thetas[3] = {PI / 2, PI / 2, PI / 2};
    wz_complex m2 = {-2.0, 0.0};
    wz_complex two = {2.0, 0.0};
    wz_mb_params p = wz_mb_params_default();

    EXPECT(wz_su2_special_neg_even(2, 1.0, &q, &why) == WZ_OK);
    EXPECT(wz_rational_is_zero(q));
    EXPECT(why && strlen(why) > 0);
    wz_string_free(why);
    wz_rational_free(q);
    EXPECT(wz_su2_special_neg_even(3, 1.0, &q, NULL) == WZ_ERR_DOMAIN);
    EXPECT(wz_su2_multi(m2, thetas, 3, NULL, &e) == WZ_OK);
    EXPECT(fabs(e.value.re - PI / 4) < 1e-10);
    EXPECT(wz_su2_multi(m2, thetas, 1, NULL, &e) == WZ_ERR_DOMAIN);

    EXPECT(wz_su3_convolution_check(2, &q, &r) == WZ_OK);
    str = wz_rational_str(q);
    EXPECT(strcmp(str, "1/14400") == 0);
    wz_string_free(str);
    wz_rational_free(q);
    wz_rational_free(r);
    EXPECT(wz_su3_continued(two, &p, NULL, &e) == WZ_OK);
    EXPECT(fabs(e.value.re - 1.35645741597927) < 1e-9);
    p.n = 0;
    EXPECT(wz_su3_continued(two, &p, NULL, &e) == WZ_ERR_DOMAIN);
}

static void test_padic(void) {
    wz_family fam;
    wz_ratfunc* f = NULL;
    wz_rational* q = NULL;
    int zero = -1, equal = -1;
    char* s;
    const char* key;

    EXPECT(wz_padic_family_count() == 4);
    EXPECT(wz_padic_family_info(2, &fam, &key, NULL, NULL) == WZ_OK);
    EXPECT(fam == WZ_SL3_CONG && strcmp(key, "sl3cong") == 0);
    EXPECT(wz_padic_family_info(9, &fam, NULL, NULL, NULL) == WZ_ERR_ARGUMENT);
    EXPECT(wz_padic_family_lookup("SU3_CONG", &fam) == WZ_OK && fam == WZ_SU3_CONG);
    EXPECT(wz_padic_family_lookup("so5", &fam) == WZ_ERR_DOMAIN);

    EXPECT(wz_padic_eval(WZ_SL2_ZP, 1, 0, &f) == WZ_OK);
    s = wz_ratfunc_str(f);
    EXPECT(strcmp(s, "(-4)/(p - 1)") == 0);
    wz_string_free(s);
    EXPECT(wz_ratfunc_eval(f, "5", &q) == WZ_OK);
    s = wz_rational_str(q);
    EXPECT(strcmp(s, "-1/1") == 0);
    wz_string_free(s);
    wz_rational_free(q);
    wz_ratfunc_free(f);

    EXPECT(wz_padic_verify_zero(WZ_SL3_CONG, 2, -1, &zero, NULL) == WZ_OK && zero == 1);
    EXPECT(wz_padic_factorization_check(WZ_SU3_CONG, &equal, NULL) == WZ_OK && equal == 1);
    EXPECT(wz_padic_absolute_limit(WZ_SL2_CONG, 3, &f) == WZ_OK);
    EXPECT(strcmp(wz_ratfunc_var(f), "s") == 0);
    wz_ratfunc_free(f);
}

static void test_finite(void) {
    wz_table* t = NULL;
    char* s = NULL;
    wz_complex v;
    wz_complex z = {0.3, -2.0};
    const char* bad = "group x 2\nclasses 1 1\nirrep 1 1 1\nirrep 1 1 2\n";

    EXPECT(wz_table_builtin("q8", &t) == WZ_OK);
    EXPECT(wz_table_order(t) == 8);
    EXPECT(wz_table_class_count(t) == 5);
    EXPECT(wz_finite_L_exact(t, 0, (size_t)wz_table_identity_class(t), &s) == WZ_OK);
    EXPECT(strcmp(s, "5") == 0);
    wz_string_free(s);
    EXPECT(wz_finite_average(t, z, &v) == WZ_OK);
    EXPECT(fabs(v.re - 1.0) < 1e-12 && fabs(v.im) < 1e-12);
    EXPECT(wz_finite_L(t, z, 99, &v) == WZ_ERR_ARGUMENT);
    wz_table_free(t);
    EXPECT(wz_table_builtin("a5", &t) == WZ_ERR_DOMAIN);
    EXPECT(wz_table_parse(bad, &t) == WZ_ERR_PARSE);
}

static void test_verify(void) {
    wz_report* r = NULL;
    wz_check c;
    EXPECT(wz_criterion_count() == 14);
    EXPECT(wz_criterion_title(0) == NULL);
    EXPECT(wz_verify_criterion(12, &r) == WZ_OK);
    EXPECT(wz_report_count(r) >= 2);
    EXPECT(wz_report_check(r, 0, &c) == WZ_OK);
    EXPECT(c.criterion == 12 && strcmp(c.suite, "padic") == 0);
    EXPECT(wz_report_all_passed(r));
    wz_report_free(r);
    EXPECT(wz_verify_suite("nonsense", &r) == WZ_ERR_DOMAIN);
}

int main(void) {
    test_status_codes();
    test_polylog();
    test_su2_su3();
    test_padic();
    test_finite();
    test_verify();
    if (failures) fprintf(stderr, "%d failure(s)\n", failures);
    else printf("all C API checks passed\n");
    return failures ? 1 : 0;
}
