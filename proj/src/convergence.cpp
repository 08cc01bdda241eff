#include "hurst/convergence.hpp"

#include <string>

#include "hurst/error.hpp"
#include "hurst/parallel.hpp"

namespace hurst {
namespace {

std::optional<double> try_estimate(const Estimator& est, std::span<const double> x) {
    try {
        return est(x).h_hat;
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

void ConvergenceConfig::validate() const {
    if (tau0 < kMinEstimationLength) {
        throw InvalidArgument("tau0 must be >= " + std::to_string(kMinEstimationLength));
    }
    if (tau_u < 1) {
        throw InvalidArgument("tau_u must be >= 1");
    }
}

void WindowConfig::validate() const {
    if (window < kMinEstimationLength) {
        throw InvalidArgument("window must be >= " + std::to_string(kMinEstimationLength));
    }
    if (step < 1 || step > window) {
        throw InvalidArgument("step must lie in [1, window]");
    }
}

std::size_t ConvergenceTrack::gaps() const noexcept {
    std::size_t count = 0;
    for (const auto& p : points) {
        count += p.h_hat ? 0 : 1;
    }
    return count;
}

std::vector<std::size_t> prefix_lengths(std::size_t m, const ConvergenceConfig& cfg) {
    cfg.validate();
    if (m < cfg.tau0) {
        throw InsufficientData("series of length " + std::to_string(m) + " is shorter than tau0 = " +
                               std::to_string(cfg.tau0));
    }
    std::vector<std::size_t> out;
    for (std::size_t len = cfg.tau0; len <= m; len += cfg.tau_u) {
        out.push_back(len);
    }
    return out;
}

std::vector<std::size_t> window_starts(std::size_t m, const WindowConfig& cfg) {
    cfg.validate();
    if (m < cfg.window) {
        throw InsufficientData("series of length " + std::to_string(m) + " is shorter than the window " +
                               std::to_string(cfg.window));
    }
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t + cfg.window <= m; t += cfg.step) {
        out.push_back(t);
    }
    return out;
}

ConvergenceTrack converge(std::span<const double> x, const ConvergenceConfig& cfg) {
    return converge(x, cfg, default_estimator_factory());
}

ConvergenceTrack converge(std::span<const double> x, const ConvergenceConfig& cfg,
                          const EstimatorFactory& factory) {
    ConvergenceTrack track;
    for (std::size_t len : prefix_lengths(x.size(), cfg)) {
        const auto h = try_estimate(factory(cfg.method, len), x.first(len));
        track.points.push_back({len, h, h ? 1u : 0u});
    }
    return track;
}

ConvergenceTrack converge_mean(std::span<const TimeSeries> batch, const ConvergenceConfig& cfg,
                               std::size_t jobs) {
    return converge_mean(batch, cfg, default_estimator_factory(), jobs);
}

ConvergenceTrack converge_mean(std::span<const TimeSeries> batch, const ConvergenceConfig& cfg,
                               const EstimatorFactory& factory, std::size_t jobs) {
    if (batch.empty()) {
        throw InsufficientData("convergence batch is empty");
    }
    const std::size_t m = batch.front().size();
    for (const auto& s : batch) {
        if (s.size() != m) {
            throw InvalidArgument("all series in a convergence batch must share one length");
        }
    }
    const auto lengths = prefix_lengths(m, cfg);

    ConvergenceTrack track;
    track.averaged = true;
    track.replicate_count = batch.size();
    track.points.resize(lengths.size());
    // Prefix-major so one estimator (and its precomputation) serves the whole batch.
    parallel_for(lengths.size(), jobs, [&](std::size_t k) {
        const std::size_t len = lengths[k];
        const auto est = factory(cfg.method, len);
        double sum = 0.0;
        std::size_t survivors = 0;
        for (const auto& s : batch) {
            if (const auto h = try_estimate(est, s.values().first(len))) {
                sum += *h;
                ++survivors;
            }
        }
        TrackPoint p{len, std::nullopt, survivors};
        if (survivors > 0) {
            p.h_hat = sum / static_cast<double>(survivors);
        }
        track.points[k] = p;
    });
    return track;
}

ConvergenceTrack sliding_window(std::span<const double> x, const WindowConfig& cfg) {
    return sliding_window(x, cfg, default_estimator_factory());
}

ConvergenceTrack sliding_window(std::span<const double> x, const WindowConfig& cfg,
                                const EstimatorFactory& factory) {
    ConvergenceTrack track;
    const auto est = factory(cfg.method, cfg.window);
    for (std::size_t t : window_starts(x.size(), cfg)) {
        const auto h = try_estimate(est, x.subspan(t, cfg.window));
        track.points.push_back({t, h, h ? 1u : 0u});
    }
    return track;
}

}  // namespace hurst
