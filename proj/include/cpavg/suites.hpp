#pragma once

#include "cpavg/report.hpp"

namespace cpavg {

struct SuiteOptions {
    int max_k = 2;
    int max_n = 2;
    std::uint64_t seed = 1;
    int threads = 1;
    std::int64_t degree = 6;       // series truncation degree
    std::uint64_t mc_samples = 0;  // 0 = suite default
};

// suite in {symfunc, ls, characters, averages, rect, oracle-crosscheck, all}
Report run_suite(const std::string& name, const SuiteOptions& opts);

std::vector<std::string> suite_names();

} // namespace cpavg
