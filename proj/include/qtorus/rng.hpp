#pragma once

#include <cstdint>

namespace qtorus {

/// Counter-based splitmix64: output i is a pure function of (seed, i), so
/// streams can be split by index without coordination and results do not
/// depend on evaluation order.  Algorithm id is recorded in run metadata.
class SplitMix64 {
public:
    static constexpr const char* id = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return finalize(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t finalize(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

private:
    std::uint64_t state_;
};

}  // namespace qtorus
