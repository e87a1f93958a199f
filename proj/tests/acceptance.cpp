// Acceptance run: one line per criterion, exact equality throughout.

#include "hcyl/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>

int main()
{
    const char* criteria[] = {"lie-dims", "dn-ranks", "psi-iso", "figure1", "stacking-constraint",
                              "star-associativity", "tree-quotient", "hain", "realization", "massey-duality",
                              "disclosure"};
    int failed = 0;
    int number = 0;
    for (const char* name : criteria) {
        ++number;
        const auto t0 = std::chrono::steady_clock::now();
        hcyl::SuiteReport report;
        std::string error;
        try {
            report = hcyl::run_suite(name, 20240917, true);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = error.empty() && report.passed();
        failed += !pass;
        std::printf("[%s] %2d %-20s %7.2fs\n", pass ? "PASS" : "FAIL", number, name, secs);
        if (!error.empty())
            std::printf("       error: %s\n", error.c_str());
        for (const hcyl::CheckResult& c : report.checks)
            std::printf("       %s %s: %s\n", c.passed ? "ok  " : "FAIL", c.name.c_str(), c.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria pass\n", number - failed, number);
    return failed ? 1 : 0;
}
