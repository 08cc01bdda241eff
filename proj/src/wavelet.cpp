#include "hurst/wavelet.hpp"

#include "hurst/error.hpp"

namespace hurst::wavelet {

std::array<double, 6> daubechies3_highpass() noexcept {
    std::array<double, 6> g{};
    constexpr std::size_t len = kDaubechies3.size();
    for (std::size_t k = 0; k < len; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        g[k] = sign * kDaubechies3[len - 1 - k];
    }
    return g;
}

std::vector<std::vector<double>> detail_coefficients(std::span<const double> x, std::size_t levels) {
    if (levels == 0 || levels >= 63 || x.size() % (std::size_t{1} << levels) != 0) {
        throw InvalidArgument("series length must be divisible by 2^levels");
    }
    const auto& h = kDaubechies3;
    const auto g = daubechies3_highpass();

    std::vector<std::vector<double>> details;
    details.reserve(levels);
    std::vector<double> approx(x.begin(), x.end());
    for (std::size_t level = 0; level < levels; ++level) {
        const std::size_t n = approx.size();
        const std::size_t half = n / 2;
        std::vector<double> next(half);
        std::vector<double> detail(half);
        for (std::size_t k = 0; k < half; ++k) {
            double a = 0.0;
            double d = 0.0;
            for (std::size_t i = 0; i < h.size(); ++i) {
                const double v = approx[(2 * k + i) % n];
                a += h[i] * v;
                d += g[i] * v;
            }
            next[k] = a;
            detail[k] = d;
        }
        details.push_back(std::move(detail));
        approx = std::move(next);
    }
    return details;
}

}  // namespace hurst::wavelet
