#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cpavg {

// Deterministic random stream with platform-stable uniform and normal
// draws (the std distributions are implementation-defined, so both are
// generated by hand from the raw 64-bit stream).
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1, u2;
        do { u1 = uniform01(); } while (u1 <= 0.0);
        u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    // independent stream for shard s of a base seed
    static Prng for_shard(std::uint64_t seed, std::uint64_t shard) {
        // splitmix64 step to decorrelate shard seeds
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (shard + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Prng(z ^ (z >> 31));
    }

  private:
    std::mt19937_64 eng_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace cpavg
