#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hurst/timeseries.hpp"

namespace hurst {

/// Number of explicit aliasing terms on each side of j = 0 before the
/// Euler-Maclaurin tail takes over.
inline constexpr int kSpectralAliasTerms = 5;

/// fGn spectral density up to a constant factor:
///   4 sin^2(lambda/2) * sum_j |lambda + 2 pi j|^(-2H-1).
/// Defined for lambda in (0, 2 pi); the function is even about pi.
[[nodiscard]] double fgn_spectral_density(HurstParameter h, double lambda);

/// The aliased part sum_{j != 0} |lambda + 2 pi j|^(-2H-1), lambda in [0, 2 pi).
[[nodiscard]] double fgn_alias_sum(double hurst, double lambda);

/// lambda_j = 2 pi j / n.
[[nodiscard]] double fourier_frequency(std::size_t j, std::size_t n);

/// I(lambda_j) = |sum_t (x_t - mean) e^{-i t lambda_j}|^2 / (2 pi N) for
/// j = 1..floor(N/2). Element 0 of the result is j = 1.
[[nodiscard]] std::vector<double> periodogram(std::span<const double> x);

}  // namespace hurst
