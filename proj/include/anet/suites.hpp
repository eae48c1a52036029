#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace anet::suites {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    bool skipped = false; // long-tier suite not requested
    std::string skip_reason;
    std::vector<Check> checks;
    std::map<std::string, std::uint64_t> counters;

    bool pass() const
    {
        if (skipped) return true;
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct SuiteOptions {
    bool long_tier = false;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string checkpoint;                           // seqsim32 resume file
    std::uint64_t budget = ~std::uint64_t{0};         // seqsim32 candidate budget
};

/// Verification suite names accepted by `anet verify`.
const std::vector<std::string>& suite_names();
bool is_long_only(const std::string& suite);

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

} // namespace anet::suites
