#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hht::verify {

struct CheckOutcome {
    std::string name;
    std::string anchor;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    double ms = 0.0;
};

struct Report {
    std::vector<CheckOutcome> checks;
    bool pass = false;
    std::uint64_t seed = 0;
};

struct Options {
    std::uint64_t seed = 1729;
};

/// Suite names accepted by run_suite (plus "all").
std::vector<std::string> suite_names();

/// Runs every check registered under `suite`; throws std::invalid_argument
/// for an unknown suite name.
Report run_suite(const std::string& suite, const Options& opt = {});

} // namespace hht::verify
