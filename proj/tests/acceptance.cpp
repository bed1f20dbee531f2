// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "hht/verify.hpp"

int main()
{
    const hht::verify::Report report = hht::verify::run_suite("all");
    for (const auto& c : report.checks)
        std::printf("%s  %-28s residual=%.3e  tol=%.0e  [%s]\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                    c.tol, c.anchor.c_str());
    std::printf("%s: %zu checks, seed %llu\n",
                report.pass ? "ALL PASS" : "FAILURES PRESENT",
                report.checks.size(),
                static_cast<unsigned long long>(report.seed));
    return report.pass ? 0 : 1;
}
