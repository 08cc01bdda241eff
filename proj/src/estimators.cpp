#include "hurst/estimators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/tools/minima.hpp>

#include "hurst/error.hpp"
#include "hurst/spectral.hpp"
#include "hurst/timeseries.hpp"
#include "hurst/wavelet.hpp"

namespace hurst {
namespace {

void require_length(std::span<const double> x) {
    if (x.size() < kMinEstimationLength) {
        throw InsufficientData("estimation needs at least " + std::to_string(kMinEstimationLength) +
                               " samples, got " + std::to_string(x.size()));
    }
}

HurstEstimate finish(EstimatorId method, double raw, Diagnostics diag) {
    if (!std::isfinite(raw)) {
        throw DegenerateInput("estimate is not finite");
    }
    diag.raw_h = raw;
    double h = raw;
    if (!(raw > 0.0 && raw < 1.0)) {
        h = raw <= 0.0 ? kClampLow : kClampHigh;
        diag.clamped = true;
    }
    return HurstEstimate{method, h, diag};
}

HurstEstimate fit_and_map(EstimatorId method, std::vector<LogLogPoint> points) {
    if (points.size() < 3) {
        throw InsufficientData(std::string(to_string(method)) + ": only " + std::to_string(points.size()) +
                               " usable regression points");
    }
    return hurst_from_fit(method, fit_weighted_least_squares(std::move(points)));
}

// Chebyshev series on lambda in [0, pi] for the aliased part of the fGn
// spectrum. Its nearest singularities sit at +-2 pi, so 24 terms are well past
// double precision.
constexpr std::size_t kChebyshevTerms = 24;

double clenshaw(std::span<const double> c, double t) {
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
        const double b0 = 2.0 * t * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + 0.5 * c[0];
}

}  // namespace

std::string_view to_string(EstimatorId id) noexcept {
    switch (id) {
        case EstimatorId::RS: return "rs";
        case EstimatorId::AggVar: return "aggvar";
        case EstimatorId::Periodogram: return "periodogram";
        case EstimatorId::Whittle: return "whittle";
        case EstimatorId::Wavelet: return "wavelet";
    }
    return "unknown";
}

std::optional<EstimatorId> parse_estimator(std::string_view name) {
    for (auto id : kAllEstimators) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

std::vector<LogLogPoint> rs_points(std::span<const double> x) {
    require_length(x);
    const auto d = centered(x);
    const std::size_t n_total = d.size();
    std::vector<LogLogPoint> points;
    for (std::size_t n = 8; n <= n_total / 2; n *= 2) {
        const std::size_t blocks = n_total / n;
        double sum_rs = 0.0;
        std::size_t used = 0;
        for (std::size_t b = 0; b < blocks; ++b) {
            const auto block = std::span<const double>(d).subspan(b * n, n);
            double mu = 0.0;
            for (double v : block) {
                mu += v;
            }
            mu /= static_cast<double>(n);
            double cum = 0.0;
            double lo = 0.0;
            double hi = 0.0;
            double ss = 0.0;
            for (double v : block) {
                const double dev = v - mu;
                cum += dev;
                lo = std::min(lo, cum);
                hi = std::max(hi, cum);
                ss += dev * dev;
            }
            // Population standard deviation of the block (classical R/S).
            const double s = std::sqrt(ss / static_cast<double>(n));
            if (s > 0.0) {
                sum_rs += (hi - lo) / s;
                ++used;
            }
        }
        if (used > 0 && sum_rs > 0.0) {
            points.push_back({std::log(static_cast<double>(n)), std::log(sum_rs / static_cast<double>(used))});
        }
    }
    return points;
}

std::vector<LogLogPoint> aggvar_points(std::span<const double> x) {
    require_length(x);
    const auto d = centered(x);
    std::vector<LogLogPoint> points;
    for (std::size_t m = 2; m <= d.size() / 8; m *= 2) {
        const double v = sample_variance(aggregate(d, m).values());
        if (v > 0.0) {
            points.push_back({std::log(static_cast<double>(m)), std::log(v)});
        }
    }
    return points;
}

std::vector<LogLogPoint> periodogram_points(std::span<const double> x, double low_fraction) {
    require_length(x);
    if (!(low_fraction > 0.0 && low_fraction <= 1.0)) {
        throw InvalidArgument("periodogram fit fraction must lie in (0, 1]");
    }
    const auto pgram = periodogram(x);
    const auto count = static_cast<std::size_t>(
        std::floor(low_fraction * static_cast<double>(x.size() / 2) + 1e-9));
    std::vector<LogLogPoint> points;
    for (std::size_t j = 1; j <= std::min(count, pgram.size()); ++j) {
        const double value = pgram[j - 1];
        if (value > 0.0) {
            points.push_back({std::log(fourier_frequency(j, x.size())), std::log(value)});
        }
    }
    return points;
}

std::vector<LogLogPoint> wavelet_points(std::span<const double> x) {
    require_length(x);
    // Truncate to a power of two; padding would add low-frequency energy.
    const std::size_t n = std::bit_floor(x.size());
    const auto octaves = static_cast<std::size_t>(std::countr_zero(n));
    // Coarsest octave keeps 8 coefficients; finest starts at 3 when there is room for 3 octaves.
    const std::size_t j2 = octaves - 3;
    const std::size_t j1 = std::max<std::size_t>(1, std::min<std::size_t>(3, j2 - 2));

    const auto d = centered(x.first(n));
    const auto details = wavelet::detail_coefficients(d, j2);
    const double ln2 = std::numbers::ln2;
    std::vector<LogLogPoint> points;
    for (std::size_t j = j1; j <= j2; ++j) {
        const auto& coeffs = details[j - 1];
        const double nj = static_cast<double>(coeffs.size());
        double energy = 0.0;
        for (double c : coeffs) {
            energy += c * c;
        }
        const double mu = energy / nj;
        if (!(mu > 0.0)) {
            continue;
        }
        const double bias = boost::math::digamma(nj / 2.0) / ln2 - std::log2(nj / 2.0);
        points.push_back({static_cast<double>(j), std::log2(mu) - bias, nj * ln2 * ln2 / 2.0});
    }
    return points;
}

HurstEstimate hurst_from_fit(EstimatorId method, const LogLogFit& fit) {
    double raw = 0.0;
    switch (method) {
        case EstimatorId::RS: raw = fit.slope; break;
        case EstimatorId::AggVar: raw = 1.0 + fit.slope / 2.0; break;
        case EstimatorId::Periodogram: raw = (1.0 - fit.slope) / 2.0; break;
        case EstimatorId::Wavelet: raw = (fit.slope + 1.0) / 2.0; break;
        case EstimatorId::Whittle: throw InvalidArgument("Whittle estimates are not regression based");
    }
    Diagnostics diag;
    diag.slope = fit.slope;
    diag.intercept = fit.intercept;
    diag.points_used = fit.points.size();
    return finish(method, raw, diag);
}

HurstEstimate estimate_rs(std::span<const double> x) {
    return fit_and_map(EstimatorId::RS, rs_points(x));
}

HurstEstimate estimate_aggvar(std::span<const double> x) {
    return fit_and_map(EstimatorId::AggVar, aggvar_points(x));
}

HurstEstimate estimate_periodogram(std::span<const double> x, double low_fraction) {
    return fit_and_map(EstimatorId::Periodogram, periodogram_points(x, low_fraction));
}

HurstEstimate estimate_wavelet(std::span<const double> x) {
    return fit_and_map(EstimatorId::Wavelet, wavelet_points(x));
}

HurstEstimate estimate_whittle(std::span<const double> x) {
    require_length(x);
    return WhittleModel(x.size()).fit(x);
}

HurstEstimate estimate(EstimatorId method, std::span<const double> x) {
    switch (method) {
        case EstimatorId::RS: return estimate_rs(x);
        case EstimatorId::AggVar: return estimate_aggvar(x);
        case EstimatorId::Periodogram: return estimate_periodogram(x);
        case EstimatorId::Whittle: return estimate_whittle(x);
        case EstimatorId::Wavelet: return estimate_wavelet(x);
    }
    throw InvalidArgument("unknown estimator");
}

WhittleModel::WhittleModel(std::size_t length) : length_(length) {
    if (length < kMinEstimationLength) {
        throw InsufficientData("Whittle model needs at least " + std::to_string(kMinEstimationLength) +
                               " samples");
    }
    const std::size_t m = length / 2;
    log_lambda_.resize(m);
    four_sin2_.resize(m);
    log_four_sin2_.resize(m);
    cheb_t_.resize(m);
    for (std::size_t j = 1; j <= m; ++j) {
        const double lambda = fourier_frequency(j, length);
        const double s = std::sin(0.5 * lambda);
        log_lambda_[j - 1] = std::log(lambda);
        four_sin2_[j - 1] = 4.0 * s * s;
        log_four_sin2_[j - 1] = std::log(four_sin2_[j - 1]);
        cheb_t_[j - 1] = 2.0 * lambda / std::numbers::pi - 1.0;
    }

    grid_h_.resize(kGridPoints);
    grid_inv_f_.resize(kGridPoints * m);
    grid_mean_log_f_.resize(kGridPoints);
    for (std::size_t g = 0; g < kGridPoints; ++g) {
        const double h = kSearchLow + (kSearchHigh - kSearchLow) * static_cast<double>(g) /
                                          static_cast<double>(kGridPoints - 1);
        grid_h_[g] = h;
        const auto f = model_spectrum(h);
        double log_sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            grid_inv_f_[g * m + j] = 1.0 / f[j];
            log_sum += std::log(f[j]);
        }
        grid_mean_log_f_[g] = log_sum / static_cast<double>(m);
    }
}

std::vector<double> WhittleModel::alias_coefficients(double h) const {
    std::array<double, kChebyshevTerms> values{};
    for (std::size_t i = 0; i < kChebyshevTerms; ++i) {
        const double theta = std::numbers::pi * (static_cast<double>(i) + 0.5) / kChebyshevTerms;
        const double lambda = 0.5 * std::numbers::pi * (std::cos(theta) + 1.0);
        values[i] = fgn_alias_sum(h, lambda);
    }
    std::vector<double> coeffs(kChebyshevTerms);
    for (std::size_t k = 0; k < kChebyshevTerms; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < kChebyshevTerms; ++i) {
            const double theta = std::numbers::pi * (static_cast<double>(i) + 0.5) / kChebyshevTerms;
            s += values[i] * std::cos(static_cast<double>(k) * theta);
        }
        coeffs[k] = 2.0 * s / kChebyshevTerms;
    }
    return coeffs;
}

std::vector<double> WhittleModel::model_spectrum(double h) const {
    const auto coeffs = alias_coefficients(h);
    const double d = 2.0 * h + 1.0;
    std::vector<double> f(log_lambda_.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        f[j] = four_sin2_[j] * (std::exp(-d * log_lambda_[j]) + clenshaw(coeffs, cheb_t_[j]));
    }
    return f;
}

double WhittleModel::objective(std::span<const double> pgram, double h) const {
    if (pgram.size() != log_lambda_.size()) {
        throw InvalidArgument("periodogram length does not match the Whittle model");
    }
    const auto coeffs = alias_coefficients(h);
    const double d = 2.0 * h + 1.0;
    double ratio = 0.0;
    double log_f = 0.0;
    for (std::size_t j = 0; j < pgram.size(); ++j) {
        const double shape = std::exp(-d * log_lambda_[j]) + clenshaw(coeffs, cheb_t_[j]);
        ratio += pgram[j] / (four_sin2_[j] * shape);
        log_f += log_four_sin2_[j] + std::log(shape);
    }
    const auto m = static_cast<double>(pgram.size());
    return std::log(ratio / m) + log_f / m;
}

HurstEstimate WhittleModel::fit(std::span<const double> x) const {
    if (x.size() != length_) {
        throw InvalidArgument("series length " + std::to_string(x.size()) + " does not match Whittle model length " +
                              std::to_string(length_));
    }
    const auto pgram = periodogram(x);
    double total = 0.0;
    for (double v : pgram) {
        total += v;
    }
    if (!(total > 0.0)) {
        throw DegenerateInput("Whittle estimation of a constant series");
    }

    const std::size_t m = pgram.size();
    const auto md = static_cast<double>(m);
    std::size_t best = 0;
    double best_q = 0.0;
    for (std::size_t g = 0; g < kGridPoints; ++g) {
        const double* inv_f = grid_inv_f_.data() + g * m;
        double ratio = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            ratio += pgram[j] * inv_f[j];
        }
        const double q = std::log(ratio / md) + grid_mean_log_f_[g];
        if (g == 0 || q < best_q) {
            best = g;
            best_q = q;
        }
    }

    const double lo = grid_h_[best == 0 ? 0 : best - 1];
    const double hi = grid_h_[std::min(best + 1, kGridPoints - 1)];
    constexpr int kBits = 16;  // ~3e-5 relative, inside the 1e-4 tolerance in H
    auto [h, q] = boost::math::tools::brent_find_minima(
        [&](double hh) { return objective(pgram, hh); }, lo, hi, kBits);
    if (best_q < q) {
        h = grid_h_[best];
        q = best_q;
    }

    Diagnostics diag;
    diag.points_used = m;
    diag.objective = q;
    diag.boundary = (h - kSearchLow) < 1e-3 || (kSearchHigh - h) < 1e-3;
    return finish(EstimatorId::Whittle, h, diag);
}

EstimationPlan::EstimationPlan(EstimatorId method, std::size_t length) : method_(method) {
    if (method == EstimatorId::Whittle && length >= kMinEstimationLength) {
        whittle_ = std::make_shared<const WhittleModel>(length);
    }
}

HurstEstimate EstimationPlan::operator()(std::span<const double> x) const {
    if (whittle_ && x.size() == whittle_->length()) {
        return whittle_->fit(x);
    }
    return estimate(method_, x);
}

}  // namespace hurst
