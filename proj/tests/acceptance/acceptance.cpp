// Acceptance runner: one PASS/FAIL line per criterion, failing checks listed beneath.
// Usage: acceptance [--criterion K]... [--verbose]

#include "witten/witten.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

int main(int argc, char** argv) {
    std::vector<int> criteria;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            int k = std::atoi(argv[++i]);
            if (k < 1 || k > wz_criterion_count()) {
                std::fprintf(stderr, "criterion must be 1..%d\n", wz_criterion_count());
                return 2;
            }
            criteria.push_back(k);
        } else if (std::strcmp(argv[i], "--verbose") == 0) {
            verbose = true;
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion K]... [--verbose]\n");
            return 2;
        }
    }
    if (criteria.empty())
        for (int k = 1; k <= wz_criterion_count(); ++k) criteria.push_back(k);

    int failed = 0;
    for (int k : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        wz_report* report = nullptr;
        if (wz_verify_criterion(k, &report) != WZ_OK) {
            std::printf("FAIL  criterion %2d  %s  (error: %s)\n", k, wz_criterion_title(k), wz_last_error());
            ++failed;
            continue;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        size_t n = wz_report_count(report), passed = 0;
        for (size_t i = 0; i < n; ++i) {
            wz_check c;
            wz_report_check(report, i, &c);
            passed += c.pass ? 1 : 0;
        }
        bool ok = passed == n;
        std::printf("%s  criterion %2d  %-44s %zu/%zu checks  %.2f s\n", ok ? "PASS" : "FAIL", k,
                    wz_criterion_title(k), passed, n, secs);
        for (size_t i = 0; i < n; ++i) {
            wz_check c;
            wz_report_check(report, i, &c);
            if (!c.pass || verbose)
                std::printf("      %s %s: observed %s, expected %s, tol %s\n", c.pass ? "ok  " : "FAIL", c.name,
                            c.observed, c.expected, c.tolerance);
        }
        failed += ok ? 0 : 1;
        wz_report_free(report);
    }
    return failed == 0 ? 0 : 1;
}
