#pragma once

#include <cstdint>

namespace sextica {

/// SplitMix64. Small, portable, and bit-reproducible across platforms,
/// which the byte-identical report contract depends on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [lo, hi), 53-bit resolution.
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

private:
    std::uint64_t state_;
};

/// Generator for one sweep instance, a pure function of (seed, index) so
/// results never depend on thread scheduling.
inline SplitMix64 instance_rng(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 a(seed);
    SplitMix64 b(index ^ 0xD1B54A32D192ED03ULL);
    return SplitMix64(a.next() ^ (b.next() + 0x9E3779B97F4A7C15ULL));
}

}  // namespace sextica
