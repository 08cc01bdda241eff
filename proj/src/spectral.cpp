#include "hurst/spectral.hpp"

#include <cmath>
#include <numbers>

#include "hurst/error.hpp"
#include "hurst/fft.hpp"

namespace hurst {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sum_{k>=0} (q + k)^(-d) for q >= J + 1/2 via Euler-Maclaurin through the B6 term.
double zeta_tail(double q, double d) {
    const double qd = std::pow(q, -d);
    const double q2 = 1.0 / (q * q);
    double s = q * qd / (d - 1.0) + 0.5 * qd;
    s += d * qd / (12.0 * q);
    s -= d * (d + 1.0) * (d + 2.0) * qd * q2 / (720.0 * q);
    s += d * (d + 1.0) * (d + 2.0) * (d + 3.0) * (d + 4.0) * qd * q2 * q2 / (30240.0 * q);
    return s;
}

}  // namespace

double fgn_alias_sum(double hurst, double lambda) {
    const double d = 2.0 * hurst + 1.0;
    double s = 0.0;
    for (int j = 1; j <= kSpectralAliasTerms; ++j) {
        s += std::pow(kTwoPi * j + lambda, -d) + std::pow(kTwoPi * j - lambda, -d);
    }
    const double offset = lambda / kTwoPi;
    const double base = kSpectralAliasTerms + 1.0;
    s += std::pow(kTwoPi, -d) * (zeta_tail(base + offset, d) + zeta_tail(base - offset, d));
    return s;
}

double fgn_spectral_density(HurstParameter h, double lambda) {
    if (!(lambda > 0.0 && lambda < kTwoPi)) {
        throw InvalidArgument("spectral density frequency must lie in (0, 2 pi)");
    }
    const double d = 2.0 * h.value() + 1.0;
    const double s = std::sin(0.5 * lambda);
    return 4.0 * s * s * (std::pow(lambda, -d) + fgn_alias_sum(h.value(), lambda));
}

double fourier_frequency(std::size_t j, std::size_t n) {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(n);
}

std::vector<double> periodogram(std::span<const double> x) {
    if (x.size() < 2) {
        throw InsufficientData("periodogram needs at least 2 samples");
    }
    const auto bins = fft::real_forward(centered(x));
    const std::size_t count = x.size() / 2;
    const double norm = 1.0 / (kTwoPi * static_cast<double>(x.size()));
    std::vector<double> out(count);
    for (std::size_t j = 1; j <= count; ++j) {
        out[j - 1] = std::norm(bins[j]) * norm;
    }
    return out;
}

}  // namespace hurst
