#pragma once

#include "hcyl/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcyl {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail; ///< counterexample or summary
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    bool full = true;
    std::vector<CheckResult> checks; ///< sorted by name

    bool passed() const;
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

/// Registered suites in a fixed order: the numbered acceptance suites first,
/// then the module invariants.
const std::vector<SuiteInfo>& suites();

/// Runs one suite. Results depend only on (name, seed, full). Throws
/// Error(out_of_range) for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 1, bool full = true);

/// Timing is excluded unless requested so that reports are byte-stable.
Json to_json(const SuiteReport& r, bool with_timing = false);

} // namespace hcyl
