// zeta: command-line front end over the witten C API.

#include "witten/witten.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cfloat>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr double kPi = 3.14159265358979323846;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kConvergence = 4, kInternal = 5 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LibError : std::runtime_error {
    LibError(wz_status s, const std::string& what) : std::runtime_error(what), status(s) {}
    wz_status status;
};

void check(wz_status st) {
    if (st != WZ_OK) throw LibError(st, wz_last_error());
}

int exit_code(wz_status st) {
    switch (st) {
        case WZ_OK: return kOk;
        case WZ_ERR_ARGUMENT: return kUsage;
        case WZ_ERR_CONVERGENCE: return kConvergence;
        case WZ_ERR_INTERNAL: return kInternal;
        default: return kDomain;
    }
}

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { wz_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

using RationalPtr = std::unique_ptr<wz_rational, decltype(&wz_rational_free)>;
using RatfuncPtr = std::unique_ptr<wz_ratfunc, decltype(&wz_ratfunc_free)>;
using TablePtr = std::unique_ptr<wz_table, decltype(&wz_table_free)>;
using ReportPtr = std::unique_ptr<wz_report, decltype(&wz_report_free)>;

RationalPtr own(wz_rational* q) { return {q, wz_rational_free}; }
RatfuncPtr own(wz_ratfunc* f) { return {f, wz_ratfunc_free}; }

std::string rational_str(const wz_rational* q) {
    OwnedString s{wz_rational_str(q)};
    return s.str();
}

// Values a record can carry.
struct Rational {
    std::string text;  // "num/den"
};
struct Ratfunc {
    std::string var;
    std::vector<std::string> num, den;
    std::string text;
};
struct Text {
    std::string text;
};
using Value = std::variant<wz_complex, Rational, Ratfunc, Text, bool>;

struct Record {
    std::string query;
    Value value;
    std::optional<double> error;  // empty means exact
    double ms = 0;
    json extra = json::object();
};

Ratfunc ratfunc_value(const wz_ratfunc* f, wz_form form) {
    Ratfunc r;
    r.var = wz_ratfunc_var(f);
    for (wz_part part : {WZ_PART_NUM, WZ_PART_DEN}) {
        auto& out = part == WZ_PART_NUM ? r.num : r.den;
        size_t n = wz_ratfunc_length(f, part, form);
        for (size_t i = 0; i < n; ++i) {
            OwnedString c{wz_ratfunc_coeff(f, part, form, i)};
            out.push_back(c.str());
        }
    }
    OwnedString s{wz_ratfunc_str(f)};
    r.text = s.str();
    return r;
}

class Printer {
public:
    Printer(std::string format, int digits) : format_(std::move(format)), digits_(digits) {
        if (format_ == "csv") std::cout << "query,value_re,value_im,error,ms\n";
    }

    void emit(const Record& r) {
        if (format_ == "json") {
            std::cout << to_json(r).dump() << "\n";
        } else if (format_ == "csv") {
            emit_csv(r);
        } else {
            emit_text(r);
        }
    }

    // Value rounded to the printed precision; text and json share it.
    double round(double v) const { return std::stod(fmt(v)); }
    // Components below the printed precision relative to |z| print as 0.
    wz_complex round(wz_complex z) const {
        double scale = std::max(std::fabs(z.re), std::fabs(z.im)) * std::pow(10.0, -digits_);
        if (std::fabs(z.re) < scale) z.re = 0;
        if (std::fabs(z.im) < scale) z.im = 0;
        return {round(z.re) + 0.0, round(z.im) + 0.0};
    }
    std::string fmt(double v) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits_, v);
        return buf;
    }
    std::string fmt_err(double e) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2e", e);
        return buf;
    }

private:
    static json coeff_json(const std::string& c) {
        if (c.find('/') == std::string::npos) {
            try {
                size_t used = 0;
                long long v = std::stoll(c, &used);
                if (used == c.size()) return v;
            } catch (const std::out_of_range&) {
            }
        }
        return c;
    }

    json value_json(const Value& v) const {
        return std::visit(
            [&](const auto& x) -> json {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, wz_complex>) {
                    wz_complex z = round(x);
                    return {{"re", z.re}, {"im", z.im}};
                } else if constexpr (std::is_same_v<T, Rational>) {
                    return x.text;
                } else if constexpr (std::is_same_v<T, Ratfunc>) {
                    json num = json::array(), den = json::array();
                    for (const auto& c : x.num) num.push_back(coeff_json(c));
                    for (const auto& c : x.den) den.push_back(coeff_json(c));
                    return {{"var", x.var}, {"num", num}, {"den", den}};
                } else if constexpr (std::is_same_v<T, Text>) {
                    return x.text;
                } else {
                    return x;
                }
            },
            v);
    }

    json to_json(const Record& r) const {
        json j;
        j["query"] = r.query;
        j["value"] = value_json(r.value);
        if (r.error)
            j["error"] = std::stod(fmt_err(*r.error));
        else
            j["error"] = "exact";
        j["ms"] = std::round(r.ms * 1000) / 1000;
        for (auto it = r.extra.begin(); it != r.extra.end(); ++it) j[it.key()] = it.value();
        return j;
    }

    std::string value_text(const Value& v) const {
        return std::visit(
            [&](const auto& x) -> std::string {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, wz_complex>) {
                    auto [re, im] = round(x);
                    if (im == 0) return fmt(re);
                    return fmt(re) + (std::signbit(im) ? " - " : " + ") + fmt(std::fabs(im)) + "i";
                } else if constexpr (std::is_same_v<T, Rational>) {
                    const auto& t = x.text;
                    return t.size() > 2 && t.substr(t.size() - 2) == "/1" ? t.substr(0, t.size() - 2) : t;
                } else if constexpr (std::is_same_v<T, Ratfunc>) {
                    return x.text;
                } else if constexpr (std::is_same_v<T, Text>) {
                    return x.text;
                } else {
                    return x ? "true" : "false";
                }
            },
            v);
    }

    void emit_text(const Record& r) const {
        std::cout << r.query << " = " << value_text(r.value) << "  ("
                  << (r.error ? "error " + fmt_err(*r.error) : std::string("exact"));
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.ms);
        std::cout << ", " << ms << " ms)";
        for (auto it = r.extra.begin(); it != r.extra.end(); ++it)
            std::cout << "  " << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>()
                                                                             : it.value().dump());
        std::cout << "\n";
    }

    static std::string csv_field(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }

    void emit_csv(const Record& r) const {
        std::string re, im;
        if (const auto* c = std::get_if<wz_complex>(&r.value)) {
            wz_complex z = round(*c);
            re = fmt(z.re);
            im = fmt(z.im);
        } else {
            re = value_text(r.value);
            if (const auto* q = std::get_if<Rational>(&r.value)) re = q->text;
        }
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.ms);
        std::cout << csv_field(r.query) << "," << csv_field(re) << "," << csv_field(im) << ","
                  << (r.error ? fmt_err(*r.error) : "exact") << "," << ms << "\n";
    }

    std::string format_;
    int digits_;
};

double positive_error(double err, wz_complex v) {
    double mag = std::hypot(v.re, v.im);
    double floor = DBL_EPSILON * (mag > 0 ? mag : 1.0);
    return std::max(err, floor);
}

double parse_real(const std::string& text, const char* what) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

wz_complex parse_complex(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.empty() || parts.size() > 2) throw UsageError("--s expects re[,im], got '" + text + "'");
    wz_complex z{parse_real(parts[0], "--s"), 0.0};
    if (parts.size() == 2) z.im = parse_real(parts[1], "--s");
    return z;
}

long as_integer(wz_complex s, const char* what) {
    if (s.im != 0 || std::floor(s.re) != s.re || std::fabs(s.re) > 1e9)
        throw LibError(WZ_ERR_DOMAIN, std::string(what) + " needs an integer s");
    return static_cast<long>(s.re);
}

double pi_fraction(const std::string& text) {
    wz_rational* q = nullptr;
    if (wz_rational_parse(text.c_str(), &q) != WZ_OK) throw UsageError("--theta-pi expects p/q, got '" + text + "'");
    double v = wz_rational_to_double(q);
    wz_rational_free(q);
    return v * kPi;
}

struct Options {
    std::string s;
    std::string theta;
    std::string theta_pi;
    long m = 1;
    int n = 1;
    std::string p = "sym";
    std::string family;
    std::string format = "text";
    int precision = 0;
    std::string table;
    std::string group;
    std::string cls;
    std::string suite = "all";
};

class Cli {
public:
    Cli(const Options& o, std::string query) : o_(o), query_(std::move(query)) {}

    void init_precision(bool flag_given) {
        int digits = 10;
        if (flag_given) {
            digits = o_.precision;
        } else if (const char* env = std::getenv("ZETA_PRECISION")) {
            try {
                size_t used = 0;
                digits = std::stoi(env, &used);
                if (used != std::string(env).size()) throw std::invalid_argument(env);
            } catch (const std::exception&) {
                throw UsageError(std::string("ZETA_PRECISION must be an integer, got '") + env + "'");
            }
        }
        if (digits < 6 || digits > 15) throw UsageError("precision must lie in [6, 15]");
        budget_ = wz_budget_default();
        budget_.target = std::pow(10.0, -digits);
        printer_.emplace(o_.format, digits);
    }

    int run(const std::string& module, const std::string& action);

private:
    double theta() const {
        if (!o_.theta_pi.empty()) return pi_fraction(o_.theta_pi);
        if (!o_.theta.empty()) return parse_real(o_.theta, "--theta");
        throw UsageError("--theta or --theta-pi is required");
    }
    std::vector<double> thetas() const {
        std::vector<double> out;
        if (!o_.theta_pi.empty())
            for (const auto& t : split(o_.theta_pi, ',')) out.push_back(pi_fraction(t));
        else if (!o_.theta.empty())
            for (const auto& t : split(o_.theta, ',')) out.push_back(parse_real(t, "--theta"));
        else
            throw UsageError("--theta or --theta-pi is required");
        return out;
    }
    wz_complex s() const {
        if (o_.s.empty()) throw UsageError("--s is required");
        return parse_complex(o_.s);
    }
    wz_family family() const {
        if (o_.family.empty()) throw UsageError("--family is required");
        wz_family f;
        if (wz_padic_family_lookup(o_.family.c_str(), &f) != WZ_OK)
            throw UsageError("unknown family '" + o_.family + "' (sl2zp, sl2cong, sl3cong, su3cong)");
        return f;
    }
    TablePtr table() const {
        wz_table* t = nullptr;
        if (!o_.table.empty() && !o_.group.empty()) throw UsageError("--table and --group are exclusive");
        if (!o_.table.empty())
            check(wz_table_load(o_.table.c_str(), &t));
        else
            check(wz_table_builtin(o_.group.empty() ? "s3" : o_.group.c_str(), &t));
        return {t, wz_table_free};
    }
    size_t class_index(const wz_table* t) const {
        if (o_.cls.empty()) return static_cast<size_t>(wz_table_identity_class(t));
        for (size_t i = 0; i < wz_table_class_count(t); ++i)
            if (o_.cls == wz_table_class_label(t, i)) return i;
        try {
            size_t used = 0;
            long idx = std::stol(o_.cls, &used);
            if (used == o_.cls.size() && idx >= 0 && static_cast<size_t>(idx) < wz_table_class_count(t))
                return static_cast<size_t>(idx);
        } catch (const std::exception&) {
        }
        throw UsageError("unknown class '" + o_.cls + "'");
    }

    template <class F>
    void timed(Record& r, F&& body) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }

    void estimate(const std::function<wz_status(wz_estimate*)>& call) {
        Record r{query_, wz_complex{}, 0.0};
        timed(r, [&] {
            wz_estimate e;
            check(call(&e));
            r.value = e.value;
            r.error = positive_error(e.error, e.value);
        });
        printer_->emit(r);
    }

    int polylog(const std::string& action);
    int su2(const std::string& action);
    int su3(const std::string& action);
    int padic(const std::string& action);
    int finite(const std::string& action);
    int verify();

    Options o_;
    std::string query_;
    wz_budget budget_{};
    std::optional<Printer> printer_;
};

int Cli::run(const std::string& module, const std::string& action) {
    if (module == "polylog") return polylog(action);
    if (module == "su2") return su2(action);
    if (module == "su3") return su3(action);
    if (module == "padic") return padic(action);
    if (module == "finite") return finite(action);
    if (module == "verify") return verify();
    throw UsageError("unknown module '" + module + "'");
}

int Cli::polylog(const std::string& action) {
    if (action == "series" || action == "continued") {
        auto fn = action == "series" ? wz_polylog_series : wz_polylog_continued;
        wz_complex z = s();
        double th = theta();
        estimate([&](wz_estimate* e) { return fn(z, th, &budget_, e); });
    } else if (action == "jonquiere") {
        wz_complex z = s();
        if (z.im != 0) throw LibError(WZ_ERR_DOMAIN, "the Jonquiere path needs real s");
        double th = theta();
        estimate([&](wz_estimate* e) { return wz_polylog_jonquiere(z.re, th, &budget_, e); });
    } else if (action == "closed") {
        Record r{query_, Text{}, std::nullopt};
        timed(r, [&] {
            wz_ratfunc* f = nullptr;
            if (o_.m < 0) throw LibError(WZ_ERR_DOMAIN, "m must be non-negative");
            check(wz_polylog_closed_form(static_cast<unsigned>(o_.m), &f));
            r.value = ratfunc_value(own(f).get(), WZ_FORM_UNIT_CONSTANT);
        });
        printer_->emit(r);
    } else if (action == "neg") {
        if (o_.m < 0) throw LibError(WZ_ERR_DOMAIN, "m must be non-negative");
        double th = theta();
        Record r{query_, wz_complex{}, 0.0};
        timed(r, [&] {
            wz_complex v;
            check(wz_polylog_eval_neg(static_cast<unsigned>(o_.m), th, &v));
            r.value = v;
            r.error = positive_error(0.0, v) * (o_.m + 2);
        });
        printer_->emit(r);
    } else {
        throw UsageError("unknown polylog action '" + action + "'");
    }
    return kOk;
}

int Cli::su2(const std::string& action) {
    if (action == "eval") {
        wz_complex z = s();
        double th = theta();
        estimate([&](wz_estimate* e) { return wz_su2_L(z, th, &budget_, e); });
    } else if (action == "special") {
        double th = theta();
        long m = o_.m;
        if (m >= 2 && m % 2 == 0) {
            Record r{query_, Text{}, std::nullopt};
            timed(r, [&] {
                wz_rational* q = nullptr;
                OwnedString why;
                check(wz_su2_special_neg_even(static_cast<int>(m), th, &q, &why.p));
                r.value = Rational{rational_str(own(q).get())};
                r.extra["justification"] = why.str();
            });
            printer_->emit(r);
        } else {
            wz_complex z{-static_cast<double>(m), 0.0};
            estimate([&](wz_estimate* e) { return wz_su2_L(z, th, &budget_, e); });
        }
    } else if (action == "deriv2") {
        double th = theta();
        estimate([&](wz_estimate* e) { return wz_su2_derivative_minus2(th, &budget_, e); });
    } else if (action == "multi") {
        wz_complex z = s();
        auto ths = thetas();
        estimate([&](wz_estimate* e) { return wz_su2_multi(z, ths.data(), ths.size(), &budget_, e); });
    } else if (action == "average") {
        wz_complex z = s();
        if (z.im != 0) throw LibError(WZ_ERR_DOMAIN, "the Haar average is implemented for real s");
        estimate([&](wz_estimate* e) { return wz_su2_haar_average(z.re, &budget_, e); });
    } else {
        throw UsageError("unknown su2 action '" + action + "'");
    }
    return kOk;
}

int Cli::su3(const std::string& action) {
    if (action == "eval") {
        wz_complex z = s();
        wz_mb_params p = wz_mb_params_default();
        p.n = o_.n;
        estimate([&](wz_estimate* e) { return wz_su3_continued(z, &p, &budget_, e); });
    } else if (action == "series") {
        wz_complex z = s();
        estimate([&](wz_estimate* e) { return wz_su3_mt_series(z, &budget_, e); });
    } else if (action == "special") {
        Record r{query_, Text{}, std::nullopt};
        timed(r, [&] {
            wz_rational* q = nullptr;
            check(wz_su3_special_value(o_.n, &q));
            r.value = Rational{rational_str(own(q).get())};
        });
        printer_->emit(r);
    } else if (action == "lemma") {
        wz_rational *lhs = nullptr, *rhs = nullptr;
        Record r{query_ + " [lhs]", Text{}, std::nullopt};
        timed(r, [&] { check(wz_su3_convolution_check(o_.n, &lhs, &rhs)); });
        auto l = own(lhs), rr = own(rhs);
        std::string ls = rational_str(l.get()), rs = rational_str(rr.get());
        r.value = Rational{ls};
        r.extra["equal"] = ls == rs;
        printer_->emit(r);
        Record r2{query_ + " [rhs]", Rational{rs}, std::nullopt};
        r2.extra["equal"] = ls == rs;
        printer_->emit(r2);
    } else {
        throw UsageError("unknown su3 action '" + action + "'");
    }
    return kOk;
}

int Cli::padic(const std::string& action) {
    if (action == "list") {
        for (size_t i = 0; i < wz_padic_family_count(); ++i) {
            const char *key, *desc, *hyp;
            check(wz_padic_family_info(i, nullptr, &key, &desc, &hyp));
            Record r{query_ + " " + key, Text{desc}, std::nullopt};
            r.extra["hypothesis"] = hyp;
            printer_->emit(r);
        }
        return kOk;
    }
    wz_family f = family();
    Record r{query_, Text{}, std::nullopt};
    if (action == "eval") {
        long sv = as_integer(s(), "padic eval");
        timed(r, [&] {
            if (o_.p == "sym") {
                wz_ratfunc* out = nullptr;
                check(wz_padic_eval(f, o_.m, sv, &out));
                r.value = ratfunc_value(own(out).get(), WZ_FORM_MONIC);
            } else {
                wz_rational* out = nullptr;
                check(wz_padic_eval_at(f, o_.m, sv, o_.p.c_str(), &out));
                r.value = Rational{rational_str(own(out).get())};
            }
        });
    } else if (action == "zero") {
        long sv = as_integer(s(), "padic zero");
        timed(r, [&] {
            int zero = 0;
            wz_ratfunc* w = nullptr;
            check(wz_padic_verify_zero(f, o_.m, sv, &zero, &w));
            r.value = ratfunc_value(own(w).get(), WZ_FORM_MONIC);
            r.extra["zero"] = zero != 0;
        });
    } else if (action == "limit") {
        timed(r, [&] {
            wz_ratfunc* out = nullptr;
            check(wz_padic_absolute_limit(f, o_.m, &out));
            r.value = ratfunc_value(own(out).get(), WZ_FORM_MONIC);
        });
    } else if (action == "factor-check") {
        timed(r, [&] {
            int equal = 0;
            OwnedString diff;
            check(wz_padic_factorization_check(f, &equal, &diff.p));
            r.value = equal != 0;
            r.extra["difference"] = diff.str();
        });
    } else {
        throw UsageError("unknown padic action '" + action + "'");
    }
    printer_->emit(r);
    return kOk;
}

int Cli::finite(const std::string& action) {
    if (action != "eval" && action != "average") throw UsageError("unknown finite action '" + action + "'");
    wz_complex z = s();
    TablePtr t = table();
    bool exact = z.im == 0 && std::floor(z.re) == z.re && std::fabs(z.re) <= 1000;
    Record r{query_, Text{}, std::nullopt};
    timed(r, [&] {
        if (exact) {
            OwnedString v;
            if (action == "eval")
                check(wz_finite_L_exact(t.get(), static_cast<long>(z.re), class_index(t.get()), &v.p));
            else
                check(wz_finite_average_exact(t.get(), static_cast<long>(z.re), &v.p));
            // Real results use the "num/den" spelling of the other exact records.
            std::string text = v.str();
            if (text.find_first_of("/i") == std::string::npos) text += "/1";
            r.value = Text{text};
        } else {
            wz_complex v;
            if (action == "eval")
                check(wz_finite_L(t.get(), z, class_index(t.get()), &v));
            else
                check(wz_finite_average(t.get(), z, &v));
            r.value = v;
            r.error = positive_error(0.0, v) * 16;
        }
    });
    printer_->emit(r);
    return kOk;
}

int Cli::verify() {
    wz_report* raw = nullptr;
    check(wz_verify_suite(o_.suite.c_str(), &raw));
    ReportPtr report(raw, wz_report_free);
    size_t n = wz_report_count(report.get()), passed = 0;
    if (o_.format == "csv") std::cout << "criterion,suite,name,pass,observed,expected,tolerance\n";
    for (size_t i = 0; i < n; ++i) {
        wz_check c;
        check(wz_report_check(report.get(), i, &c));
        passed += c.pass ? 1 : 0;
        if (o_.format == "json") {
            json j = {{"criterion", c.criterion}, {"suite", c.suite},         {"name", c.name},
                      {"pass", c.pass != 0},      {"observed", c.observed},   {"expected", c.expected},
                      {"tolerance", c.tolerance}};
            std::cout << j.dump() << "\n";
        } else if (o_.format == "csv") {
            auto q = [](const std::string& s) {
                std::string out = "\"";
                for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                return out + "\"";
            };
            std::cout << c.criterion << "," << c.suite << "," << q(c.name) << "," << (c.pass ? "pass" : "fail") << ","
                      << q(c.observed) << "," << q(c.expected) << "," << q(c.tolerance) << "\n";
        } else {
            std::printf("%s  [%2d] %-8s %-52s observed %s, expected %s, tol %s\n", c.pass ? "PASS" : "FAIL",
                        c.criterion, c.suite, c.name, c.observed, c.expected, c.tolerance);
        }
    }
    if (o_.format == "json")
        std::cout << json{{"suite", o_.suite}, {"passed", passed}, {"total", n}}.dump() << "\n";
    else if (o_.format == "text")
        std::printf("%zu/%zu checks passed\n", passed, n);
    return passed == n ? kOk : kVerifyFailed;
}

// Query echo: the command line without output-only flags.
std::string make_query(int argc, char** argv) {
    std::string q;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--format" || a == "--precision") {
            ++i;
            continue;
        }
        if (a.rfind("--format=", 0) == 0 || a.rfind("--precision=", 0) == 0) continue;
        if (!q.empty()) q += ' ';
        q += a;
    }
    return q;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Witten zeta functions: evaluation and verification"};
    app.require_subcommand(1);
    std::vector<std::pair<std::string, std::string>> selected;
    CLI::Option* precision_flag = nullptr;
    std::vector<CLI::Option*> precision_flags;

    auto common = [&](CLI::App* leaf) {
        leaf->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        precision_flags.push_back(leaf->add_option("--precision", o.precision, "Significant digits, 6..15"));
    };
    auto add_s = [&](CLI::App* leaf, bool required = true) {
        leaf->add_option("--s", o.s, "Argument s as re[,im]")->required(required)->allow_extra_args(false);
    };
    auto add_theta = [&](CLI::App* leaf, const char* help) {
        auto* t = leaf->add_option("--theta", o.theta, help);
        auto* tp = leaf->add_option("--theta-pi", o.theta_pi, "Angle as a multiple p/q of pi");
        t->excludes(tp);
        tp->excludes(t);
    };
    auto add_m = [&](CLI::App* leaf, bool required) { leaf->add_option("--m", o.m, "Integer m")->required(required); };
    auto add_family = [&](CLI::App* leaf) {
        leaf->add_option("--family", o.family, "sl2zp, sl2cong, sl3cong or su3cong")->required();
    };
    auto action = [&](CLI::App* module, const std::string& name, const std::string& help) {
        CLI::App* leaf = module->add_subcommand(name, help);
        leaf->callback([&selected, module, name] { selected.emplace_back(module->get_name(), name); });
        common(leaf);
        return leaf;
    };

    CLI::App* polylog = app.add_subcommand("polylog", "Unit-circle polylogarithm Z(s, e^{i theta})");
    polylog->require_subcommand(1);
    for (const char* name : {"series", "continued", "jonquiere"}) {
        CLI::App* leaf = action(polylog, name, std::string("Z(s, x) via ") + name);
        add_s(leaf);
        add_theta(leaf, "Angle in radians");
    }
    {
        CLI::App* leaf = action(polylog, "closed", "Rational function for Z(-m, x)");
        add_m(leaf, true);
        leaf = action(polylog, "neg", "Z(-m, x) from the closed form");
        add_m(leaf, true);
        add_theta(leaf, "Angle in radians");
    }

    CLI::App* su2 = app.add_subcommand("su2", "SU(2) Witten L-function");
    su2->require_subcommand(1);
    {
        CLI::App* leaf = action(su2, "eval", "zeta_W(s, g)");
        add_s(leaf);
        add_theta(leaf, "Class angle in radians");
        leaf = action(su2, "special", "Special value at s = -m");
        add_m(leaf, true);
        add_theta(leaf, "Class angle in radians");
        leaf = action(su2, "deriv2", "Derivative at s = -2");
        add_theta(leaf, "Class angle in radians");
        leaf = action(su2, "multi", "Multi-character L-function");
        add_s(leaf);
        add_theta(leaf, "Comma-separated class angles");
        leaf = action(su2, "average", "Haar average");
        add_s(leaf);
    }

    CLI::App* su3 = app.add_subcommand("su3", "SU(3) Witten zeta");
    su3->require_subcommand(1);
    {
        CLI::App* leaf = action(su3, "eval", "Mellin-Barnes continuation");
        add_s(leaf);
        leaf->add_option("--n", o.n, "Strip selector (M = 2n + 2)");
        leaf = action(su3, "series", "Double series, Re s > 1");
        add_s(leaf);
        leaf = action(su3, "special", "Exact value at s = -n");
        leaf->add_option("--n", o.n, "Positive integer n")->required();
        leaf = action(su3, "lemma", "Bernoulli convolution identity for even n");
        leaf->add_option("--n", o.n, "Positive even integer n")->required();
    }

    CLI::App* padic = app.add_subcommand("padic", "p-adic group families");
    padic->require_subcommand(1);
    {
        action(padic, "list", "List the catalog");
        CLI::App* leaf = action(padic, "eval", "Value at integer s");
        add_family(leaf);
        add_m(leaf, false);
        add_s(leaf);
        leaf->add_option("--p", o.p, "Prime as an integer or rational, or 'sym'");
        leaf = action(padic, "zero", "Symbolic zero check at integer s");
        add_family(leaf);
        add_m(leaf, false);
        add_s(leaf);
        leaf = action(padic, "limit", "Absolute limit p -> 1");
        add_family(leaf);
        add_m(leaf, false);
        leaf = action(padic, "factor-check", "Compare factored and u(X) forms");
        add_family(leaf);
    }

    CLI::App* finite = app.add_subcommand("finite", "Finite groups from a character table");
    finite->require_subcommand(1);
    for (const char* name : {"eval", "average"}) {
        CLI::App* leaf = action(finite, name, std::string(name) == "eval" ? "zeta_W(s, g)" : "Haar average");
        add_s(leaf);
        auto* table = leaf->add_option("--table", o.table, "Character-table file");
        auto* group = leaf->add_option("--group", o.group, "Built-in table: s3 or q8");
        table->excludes(group);
        if (std::string(name) == "eval") leaf->add_option("--class", o.cls, "Class label or index");
    }

    CLI::App* verify = app.add_subcommand("verify", "Run acceptance checks");
    verify->add_option("--suite", o.suite, "all, core, polylog, su2, su3 or padic")
        ->check(CLI::IsMember({"all", "core", "polylog", "su2", "su3", "padic"}));
    verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    precision_flags.push_back(verify->add_option("--precision", o.precision, "Accepted for uniformity"));
    verify->callback([&selected] { selected.emplace_back("verify", ""); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    for (auto* f : precision_flags)
        if (f->count() > 0) precision_flag = f;

    try {
        if (selected.empty()) throw UsageError("missing action");
        Cli cli(o, make_query(argc, argv));
        cli.init_precision(precision_flag != nullptr);
        return cli.run(selected.back().first, selected.back().second);
    } catch (const UsageError& e) {
        std::cerr << "zeta: " << e.what() << "\n";
        return kUsage;
    } catch (const LibError& e) {
        std::cerr << "zeta: " << wz_status_name(e.status) << " error: " << e.what() << "\n";
        return exit_code(e.status);
    } catch (const std::exception& e) {
        std::cerr << "zeta: internal error: " << e.what() << "\n";
        return kInternal;
    }
}
