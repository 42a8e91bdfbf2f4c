#pragma once

#include <cstdint>
#include <random>

#include "llab/error.hpp"

namespace llab {

// Deterministic random source. std::mt19937_64 has a portable bit stream but
// std::uniform_int_distribution does not, so bounded draws use rejection
// sampling on the raw stream; identical seeds give identical results on
// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n).
    long below(long n) {
        if (n <= 0) throw input_error("random bound must be positive");
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        for (;;) {
            const std::uint64_t v = eng_();
            if (v < limit) return static_cast<long>(v % un);
        }
    }

    // Uniform in [lo, hi], inclusive.
    long in_range(long lo, long hi) {
        if (hi < lo) throw input_error("empty random range");
        return lo + below(hi - lo + 1);
    }

    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 eng_;
};

} // namespace llab
