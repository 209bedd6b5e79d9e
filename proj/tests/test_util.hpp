#pragma once

// Shared helpers for the test binaries: a deterministic RNG with
// platform-stable integer draws, plus random generators for rationals,
// polynomials and partitions.

#include <cstdint>
#include <random>
#include <vector>

#include "cpavg/laurent.hpp"
#include "cpavg/partition.hpp"
#include "cpavg/rational.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline cpavg::Rational rand_rational(Rng& rng, std::int64_t max_num = 9,
                                     std::int64_t max_den = 9) {
    std::int64_t n = rand_int(rng, -max_num, max_num);
    std::int64_t d = rand_int(rng, 1, max_den);
    return cpavg::Rational(static_cast<long>(n), static_cast<long>(d));
}

inline cpavg::Rational rand_nonzero_rational(Rng& rng, std::int64_t max_num = 9,
                                             std::int64_t max_den = 9) {
    for (;;) {
        auto r = rand_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline cpavg::LaurentPoly rand_poly(Rng& rng, int nvars, int terms, std::int64_t max_exp) {
    cpavg::LaurentPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        cpavg::ExponentVec e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = rand_int(rng, -max_exp, max_exp);
        p += cpavg::LaurentPoly::monomial(nvars, e, rand_rational(rng));
    }
    return p;
}

inline cpavg::Partition rand_partition(Rng& rng, std::int64_t max_size) {
    std::int64_t target = rand_int(rng, 0, max_size);
    std::vector<std::int64_t> parts;
    std::int64_t cap = target;
    while (target > 0 && cap > 0) {
        std::int64_t v = rand_int(rng, 1, cap);
        parts.push_back(v);
        target -= v;
        cap = std::min(cap, v);
        if (target < cap) cap = target;
    }
    return cpavg::Partition(std::move(parts));
}

// Pairwise-distinct nonzero rationals avoiding p*q == 1 and |p| == 1, the
// generic-point requirements shared by the character formulas.
inline std::vector<cpavg::Rational> rand_generic_points(Rng& rng, int count) {
    std::vector<cpavg::Rational> pts;
    while (static_cast<int>(pts.size()) < count) {
        auto c = rand_nonzero_rational(rng);
        if (c.abs() == cpavg::Rational(1)) continue;
        bool ok = true;
        for (const auto& p : pts)
            if (p == c || (p * c).is_one()) ok = false;
        if (ok) pts.push_back(c);
    }
    return pts;
}

} // namespace testutil
