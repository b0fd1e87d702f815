#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace altdes {

struct CheckResult {
    std::string name;    // stable machine-friendly identifier
    std::string ref;     // identity the check exercises
    bool pass = false;
    std::string detail;  // bounds used, or the first discrepancy found
};

struct VerifyOptions {
    // 0 keeps each check's default enumeration bound; positive values clamp
    // the bounds that drive brute-force scans
    int n_max = 0;
    std::uint64_t seed = 42;
};

// suites: oracle, recurrences, series-identities, ncsf, qt, all
std::vector<std::string> verify_suite_names();

std::vector<CheckResult> verify_suite(const std::string& suite,
                                      const VerifyOptions& opts);

}  // namespace altdes
