// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "mslab/verify.hpp"

int main() {
    const std::vector<std::string> names = mslab::check_names();
    int failures = 0;
    for (size_t i = 0; i < names.size(); ++i) {
        const mslab::CheckResult r = mslab::run_check(names[i], 12345);
        std::printf("criterion %2zu %-22s %s (%.1fs) %s\n", i + 1,
                    r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, names.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", names.size());
    return 0;
}
