#pragma once

#include <string>
#include <vector>

namespace mslab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Named verification checks over built-in profile families.
std::vector<std::string> check_names();
CheckResult run_check(const std::string& name, uint64_t seed);
std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    uint64_t seed);

}  // namespace mslab
