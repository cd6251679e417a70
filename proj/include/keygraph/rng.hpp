#pragma once

#include <cstdint>

namespace keygraph {

/// 64-bit finalizer with full avalanche (the SplitMix64 output stage).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent sub-stream seed from (seed, word).
///
/// All randomness in the library flows through chains of derive_seed
/// calls, so every sample is a pure function of the master seed and the
/// indices that led to it. Results are therefore reproducible across
/// runs, execution orders and thread counts.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t word) noexcept {
    return mix64(seed ^ mix64(word * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
}

/// Counter-based generator (SplitMix64): period 2^64 per stream,
/// trivially seedable, and bit-stable across platforms. Distribution
/// helpers below avoid <random> distributions, whose output is not
/// specified by the standard.
class SplitMix64 {
public:
    constexpr explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound); bound must be positive.
    /// Lemire's multiply-shift rejection, bias-free.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace keygraph
