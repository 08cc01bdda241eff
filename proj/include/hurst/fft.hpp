#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hurst::fft {

enum class Direction { Forward, Backward };

/// Unnormalised complex DFT of any length. Forward uses e^{-2 pi i jk/n}.
[[nodiscard]] std::vector<std::complex<double>> transform(std::span<const std::complex<double>> in,
                                                          Direction dir);

/// Forward DFT of a real sequence; returns the n/2 + 1 non-redundant bins.
[[nodiscard]] std::vector<std::complex<double>> real_forward(std::span<const double> in);

}  // namespace hurst::fft
