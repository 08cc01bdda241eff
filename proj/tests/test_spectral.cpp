#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hurst/error.hpp"
#include "hurst/estimators.hpp"
#include "hurst/fgn.hpp"
#include "hurst/fft.hpp"
#include "hurst/spectral.hpp"
#include "oracles.hpp"

using namespace hurst;

TEST_CASE("spectral density agrees with a brute-force aliasing sum") {
    // 20000 explicit terms plus a midpoint tail leave an error far below 1e-9.
    for (double h : {0.05, 0.3, 0.5, 0.7, 0.9, 0.99}) {
        for (double lambda : {1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 3.0, std::numbers::pi}) {
            CAPTURE(h);
            CAPTURE(lambda);
            const double ours = fgn_spectral_density(HurstParameter(h), lambda);
            const double ref = oracle::brute_spectral_density(h, lambda, 20000);
            CHECK(std::abs(ours / ref - 1.0) < 1e-6);
        }
    }
}

TEST_CASE("H = 0.5 spectrum is flat") {
    double lo = 1e300;
    double hi = 0.0;
    for (double lambda = 0.1; lambda <= std::numbers::pi; lambda += 0.01) {
        const double f = fgn_spectral_density(HurstParameter(0.5), lambda);
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }
    CHECK(hi / lo - 1.0 < 0.02);
}

TEST_CASE("low-frequency power law with exponent 1 - 2H") {
    const double h = 0.9;
    const auto scaled = [&](double lambda) {
        return fgn_spectral_density(HurstParameter(h), lambda) * std::pow(lambda, 2.0 * h - 1.0);
    };
    CHECK(std::abs(scaled(0.01) / scaled(0.005) - 1.0) < 0.03);
}

TEST_CASE("density is even about pi") {
    for (double h : {0.3, 0.8}) {
        for (double lambda : {0.2, 1.1, 2.9}) {
            const double a = fgn_spectral_density(HurstParameter(h), lambda);
            const double b = fgn_spectral_density(HurstParameter(h), 2.0 * std::numbers::pi - lambda);
            CHECK(std::abs(a / b - 1.0) < 1e-9);
        }
    }
    CHECK_THROWS_AS((void)fgn_spectral_density(HurstParameter(0.5), 0.0), InvalidArgument);
    CHECK_THROWS_AS((void)fgn_spectral_density(HurstParameter(0.5), 7.0), InvalidArgument);
}

TEST_CASE("periodogram matches a direct DFT") {
    for (std::size_t n : {64u, 100u, 263u}) {
        const auto x = generate({HurstParameter(0.7), n, 1.0, n});
        const auto fast = periodogram(x.values());
        const auto slow = oracle::naive_periodogram(x.values());
        REQUIRE(fast.size() == n / 2);
        for (std::size_t j = 0; j < fast.size(); ++j) {
            CHECK(fast[j] == doctest::Approx(slow[j]).epsilon(1e-9).scale(1e-12));
        }
    }
}

TEST_CASE("complex DFT round trip") {
    std::vector<std::complex<double>> v;
    for (int i = 0; i < 37; ++i) {
        v.emplace_back(std::sin(i * 0.3), std::cos(i * 1.7));
    }
    const auto back = fft::transform(fft::transform(v, fft::Direction::Forward), fft::Direction::Backward);
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(back[i].real() / 37.0 == doctest::Approx(v[i].real()).scale(1.0).epsilon(1e-12));
        CHECK(back[i].imag() / 37.0 == doctest::Approx(v[i].imag()).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("Whittle model spectrum equals the exact density") {
    for (std::size_t n : {64u, 1000u, 4096u}) {
        const WhittleModel model(n);
        for (double h : {0.01, 0.3, 0.5, 0.8, 0.99}) {
            const auto f = model.model_spectrum(h);
            for (std::size_t j = 1; j <= n / 2; j += 7) {
                CHECK(f[j - 1] == doctest::Approx(fgn_spectral_density(HurstParameter(h), fourier_frequency(j, n)))
                                      .epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("Whittle objective is minimised at the generating H") {
    // Feed the exact fGn spectrum in place of a periodogram: by Jensen the
    // profiled objective is minimal exactly where the model equals the data.
    const std::size_t n = 1024;
    const WhittleModel model(n);
    const auto data = model.model_spectrum(0.8);
    double best_h = 0.0;
    double best_q = 1e300;
    for (int k = 0; k <= 980; ++k) {
        const double h = 0.01 + k * 0.001;
        const double q = model.objective(data, h);
        if (q < best_q) {
            best_q = q;
            best_h = h;
        }
    }
    CHECK(std::abs(best_h - 0.8) <= 0.01);
}
