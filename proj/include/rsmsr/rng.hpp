#pragma once

#include <cstdint>

namespace rsmsr {

/// SplitMix64: the deterministic generator used for all seeded sampling
/// (messages, helper sets). Fully specified here so that identical seeds
/// produce byte-identical outputs on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). Bias is negligible for the small bounds
    /// used here and, more to the point, irrelevant: sampling only needs to
    /// be deterministic and well spread.
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

}  // namespace rsmsr
