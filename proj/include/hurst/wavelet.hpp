#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace hurst::wavelet {

/// Daubechies scaling filter with 3 vanishing moments (6 taps, sum sqrt(2)).
inline constexpr std::array<double, 6> kDaubechies3 = {
    0.33267055295008261599851158914,  0.80689150931109257649449360409,
    0.45987750211849157009515194215,  -0.13501102001025458869638990670,
    -0.08544127388202666169281916918, 0.03522629188570953660274066472,
};

/// Quadrature-mirror wavelet filter g[k] = (-1)^k h[L-1-k].
[[nodiscard]] std::array<double, 6> daubechies3_highpass() noexcept;

/// Periodised orthonormal DWT. Returns detail coefficients per octave,
/// result[j-1] holding octave j (N / 2^j coefficients). The length of `x`
/// must be divisible by 2^levels.
[[nodiscard]] std::vector<std::vector<double>> detail_coefficients(std::span<const double> x,
                                                                   std::size_t levels);

}  // namespace hurst::wavelet
