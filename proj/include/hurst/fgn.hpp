#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hurst/timeseries.hpp"

namespace hurst {

/// Request for one exact fractional Gaussian noise sample path.
struct FgnSpec {
    HurstParameter hurst;
    std::size_t length;
    double variance = 1.0;
    std::uint64_t seed = 0;
};

/// [gamma(0), ..., gamma(n)] with gamma(k) = variance * rho(k).
[[nodiscard]] std::vector<double> autocovariance_vector(HurstParameter h, double variance, std::size_t n);

/// Eigenvalues of the length-2N circulant embedding of gamma (size N + 1).
/// Values within -1e-9 * gamma(0) of zero are treated as rounding noise and
/// clamped; anything more negative raises EmbeddingFailure.
[[nodiscard]] std::vector<double> circulant_eigenvalues(std::span<const double> gamma);

/// Davies-Harte synthesiser with the embedding precomputed, so repeated draws
/// of the same (H, N, variance) only pay for one inverse FFT each.
class FgnGenerator {
public:
    FgnGenerator(HurstParameter h, std::size_t length, double variance = 1.0);

    [[nodiscard]] TimeSeries sample(std::uint64_t seed) const;
    [[nodiscard]] std::size_t length() const noexcept { return length_; }

private:
    std::size_t length_;
    std::vector<double> sqrt_eigen_;  // size 2N
};

/// Exact fGn increments (not the cumulative fBm path). Pure in `spec`.
[[nodiscard]] TimeSeries generate(const FgnSpec& spec);

/// `count` independent paths; path i is drawn with derive_seed(base_seed, i).
/// `spec.seed` is ignored.
[[nodiscard]] std::vector<TimeSeries> generate_batch(const FgnSpec& spec, std::size_t count,
                                                     std::uint64_t base_seed);

}  // namespace hurst
