#pragma once

#include <cstdint>
#include <random>

namespace hurst {

/// SplitMix64 finaliser. A bijection on 64-bit words.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based child seed: mix64(base + (index + 1) * golden).
/// For a fixed base this is injective in index, and it never depends on
/// generator state, so any cell or replicate can be recomputed on its own.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    return mix64(base + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Standard normal variates from mt19937_64 via the Box-Muller transform.
///
/// std::normal_distribution is implementation-defined, so it is avoided: the
/// uniforms are built from the top 53 bits of each 64-bit word and the
/// transform is spelled out here, which keeps streams identical across
/// standard libraries.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double next();

private:
    double uniform_open();  // (0, 1]

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hurst
