#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hurst/estimators.hpp"
#include "hurst/study.hpp"
#include "hurst/timeseries.hpp"

namespace hurst {

/// Growing-prefix analysis: prefixes of length tau0, tau0 + tau_u, ...
struct ConvergenceConfig {
    EstimatorId method = EstimatorId::Whittle;
    std::size_t tau0 = 64;
    std::size_t tau_u = 200;

    void validate() const;  // tau0 >= 64, tau_u >= 1
};

/// Fixed-length windows starting at 0, step, 2*step, ...
struct WindowConfig {
    EstimatorId method = EstimatorId::Whittle;
    std::size_t window = 256;
    std::size_t step = 256;

    void validate() const;  // window >= 64, 1 <= step <= window
};

struct TrackPoint {
    std::size_t t;                 // prefix length, or window start
    std::optional<double> h_hat;   // empty marks a gap
    std::size_t survivors = 0;     // series that contributed to h_hat
};

struct ConvergenceTrack {
    std::vector<TrackPoint> points;
    bool averaged = false;
    std::size_t replicate_count = 1;

    [[nodiscard]] std::size_t gaps() const noexcept;
};

/// Prefix lengths for a series of length `m`; depends on the config only.
[[nodiscard]] std::vector<std::size_t> prefix_lengths(std::size_t m, const ConvergenceConfig& cfg);

/// Window starts for a series of length `m`.
[[nodiscard]] std::vector<std::size_t> window_starts(std::size_t m, const WindowConfig& cfg);

[[nodiscard]] ConvergenceTrack converge(std::span<const double> x, const ConvergenceConfig& cfg);
[[nodiscard]] ConvergenceTrack converge(std::span<const double> x, const ConvergenceConfig& cfg,
                                        const EstimatorFactory& factory);

/// Pointwise mean of the per-series tracks; a prefix where some series
/// errored averages the survivors. Prefixes are evaluated on `jobs` threads.
[[nodiscard]] ConvergenceTrack converge_mean(std::span<const TimeSeries> batch, const ConvergenceConfig& cfg,
                                             std::size_t jobs = 0);
[[nodiscard]] ConvergenceTrack converge_mean(std::span<const TimeSeries> batch, const ConvergenceConfig& cfg,
                                             const EstimatorFactory& factory, std::size_t jobs = 0);

[[nodiscard]] ConvergenceTrack sliding_window(std::span<const double> x, const WindowConfig& cfg);
[[nodiscard]] ConvergenceTrack sliding_window(std::span<const double> x, const WindowConfig& cfg,
                                              const EstimatorFactory& factory);

}  // namespace hurst
