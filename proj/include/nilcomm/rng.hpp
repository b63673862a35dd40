#pragma once

#include <cstdint>

namespace nilcomm {

/// SplitMix64: tiny deterministic generator, identical output on every
/// platform. Used wherever a recorded seed must reproduce a run exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [lo, hi], hi - lo small.
    long range(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

private:
    std::uint64_t state_;
};

}  // namespace nilcomm
