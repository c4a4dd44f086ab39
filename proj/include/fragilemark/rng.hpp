#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

namespace fragilemark {

/// SplitMix64. Used everywhere a reproducible stream is needed: the standard
/// <random> distributions are implementation-defined, and frozen test vectors
/// must not move between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [0, bound) by rejection, exact.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound < 2) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    /// Standard normal via Box-Muller (one value per call, cached pair).
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        u2 = next_double();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(2.0 * std::numbers::pi * u2);
        has_spare_ = true;
        return mag * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Fisher-Yates permutation of {0, ..., n-1}, deterministic given seed.
std::vector<std::uint32_t> seeded_permutation(std::size_t n, std::uint64_t seed);

/// FNV-1a over bytes; stable content/key hashing for caches and split digests.
std::uint64_t fnv1a64(const void* bytes, std::size_t len,
                      std::uint64_t basis = 0xCBF29CE484222325ULL);
std::uint64_t fnv1a64(std::string_view s,
                      std::uint64_t basis = 0xCBF29CE484222325ULL);

/// Single SplitMix64 scramble round, for combining seeds and ids.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace fragilemark
