#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cpavg {

// One verification case: identity id, parameter snapshot, status and both
// side values (always recorded so failures are self-describing).
struct CaseResult {
    std::string id;
    std::string params;
    std::string status; // "pass", "fail", "expected-fail", "error"
    std::string lhs;
    std::string rhs;
    double elapsed_ms = 0.0;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    int threads = 1;
    std::vector<CaseResult> cases;

    int count(const std::string& status) const {
        int n = 0;
        for (const auto& c : cases)
            if (c.status == status) ++n;
        return n;
    }
    // expected-fail entries do not count against success
    bool ok() const { return count("fail") == 0 && count("error") == 0; }
};

} // namespace cpavg
