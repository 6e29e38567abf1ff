#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sepdiff::selftest {

struct SuiteResult {
    std::string name;
    std::uint32_t cases = 0;
    std::uint32_t failed = 0;
};

// Runs every property suite with the given seed; deterministic.
std::vector<SuiteResult> run_all(std::uint64_t seed, std::uint32_t cases_per_suite);

}  // namespace sepdiff::selftest
