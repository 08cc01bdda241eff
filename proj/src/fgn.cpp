#include "hurst/fgn.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "hurst/error.hpp"
#include "hurst/fft.hpp"
#include "hurst/random.hpp"

namespace hurst {

std::vector<double> autocovariance_vector(HurstParameter h, double variance, std::size_t n) {
    std::vector<double> gamma(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        gamma[k] = variance * exact_autocorrelation(h, k);
    }
    return gamma;
}

std::vector<double> circulant_eigenvalues(std::span<const double> gamma) {
    if (gamma.size() < 2) {
        throw InvalidArgument("circulant embedding needs gamma(0..N) with N >= 1");
    }
    const std::size_t n = gamma.size() - 1;
    std::vector<std::complex<double>> row(2 * n);
    for (std::size_t k = 0; k <= n; ++k) {
        row[k] = gamma[k];
    }
    for (std::size_t k = 1; k < n; ++k) {
        row[n + k] = gamma[n - k];
    }
    const auto spectrum = fft::transform(row, fft::Direction::Forward);

    const double eps = 1e-9 * gamma[0];
    std::vector<double> eigen(2 * n);
    for (std::size_t j = 0; j < 2 * n; ++j) {
        double v = spectrum[j].real();
        if (v < -eps) {
            throw EmbeddingFailure("circulant eigenvalue " + std::to_string(j) + " is " +
                                   std::to_string(v) + " (negative beyond tolerance)");
        }
        eigen[j] = v < 0.0 ? 0.0 : v;
    }
    return eigen;
}

FgnGenerator::FgnGenerator(HurstParameter h, std::size_t length, double variance) : length_(length) {
    if (length < 2) {
        throw InvalidArgument("fGn length must be >= 2");
    }
    if (!(variance > 0.0) || !std::isfinite(variance)) {
        throw InvalidArgument("fGn variance must be positive and finite");
    }
    const auto eigen = circulant_eigenvalues(autocovariance_vector(h, variance, length));
    sqrt_eigen_.resize(eigen.size());
    for (std::size_t j = 0; j < eigen.size(); ++j) {
        sqrt_eigen_[j] = std::sqrt(eigen[j]);
    }
}

TimeSeries FgnGenerator::sample(std::uint64_t seed) const {
    const std::size_t n = length_;
    const std::size_t m = 2 * n;
    GaussianStream normal(seed);

    // Hermitian spectral vector: real at j = 0 and j = N, conjugate pairs
    // elsewhere. Exactly 2N standard normals are consumed.
    std::vector<std::complex<double>> w(m);
    w[0] = sqrt_eigen_[0] * normal.next();
    w[n] = sqrt_eigen_[n] * normal.next();
    const double half = std::sqrt(0.5);
    for (std::size_t j = 1; j < n; ++j) {
        const double re = normal.next();
        const double im = normal.next();
        const double s = sqrt_eigen_[j] * half;
        w[j] = {s * re, s * im};
        w[m - j] = std::conj(w[j]);
    }

    const auto z = fft::transform(w, fft::Direction::Backward);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = z[k].real() * scale;
    }
    return TimeSeries(std::move(out));
}

TimeSeries generate(const FgnSpec& spec) {
    return FgnGenerator(spec.hurst, spec.length, spec.variance).sample(spec.seed);
}

std::vector<TimeSeries> generate_batch(const FgnSpec& spec, std::size_t count, std::uint64_t base_seed) {
    if (count == 0) {
        throw InvalidArgument("batch count must be >= 1");
    }
    const FgnGenerator gen(spec.hurst, spec.length, spec.variance);
    std::vector<TimeSeries> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(gen.sample(derive_seed(base_seed, i)));
    }
    return out;
}

}  // namespace hurst
