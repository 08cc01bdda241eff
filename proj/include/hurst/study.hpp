#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hurst/estimators.hpp"

namespace hurst {

enum class QualityClass { HighPrecision, Acceptable, Biased, Unclassified };

[[nodiscard]] std::string_view to_string(QualityClass q) noexcept;

/// Quality thresholds, applied to |bias|.
struct QualityThresholds {
    static constexpr double kHighBias = 0.03;
    static constexpr double kHighSigma = 0.015;
    static constexpr double kAcceptableBias = 0.05;
    static constexpr double kAcceptableSigma = 0.02;
    static constexpr double kBiased = 0.1;
};

/// HighPrecision: |bias| <= 0.03 and sigma <= 0.015. Acceptable: otherwise
/// |bias| <= 0.05 and sigma <= 0.02. Biased: |bias| > 0.1. The rest is
/// Unclassified. NaN inputs are Unclassified.
[[nodiscard]] QualityClass classify(double bias, double sigma);

struct StudyConfig {
    std::vector<double> h_grid = {0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
    std::vector<int> length_exponents = {6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
    std::size_t replicates = 100;
    std::vector<EstimatorId> estimators = {kAllEstimators.begin(), kAllEstimators.end()};
    std::uint64_t base_seed = 0;
    std::size_t jobs = 0;  // 0 = hardware concurrency; never changes results

    /// Throws InvalidArgument on an empty grid, duplicates, H outside (0, 1),
    /// exponents outside [6, 30] or fewer than 2 replicates.
    void validate() const;
};

struct StudyCell {
    double h0;
    std::size_t n;
    EstimatorId method;
    double bias;   // h0 - mean(estimates), signed
    double sigma;  // sample standard deviation of the estimates
    double mse;    // mean((estimate - h0)^2)
    double rmse;   // sqrt(mse)
    std::size_t used;     // replicates that produced an estimate
    std::size_t errored;  // replicates whose estimator threw
    std::size_t clamped;  // used replicates flagged as clamped
    QualityClass quality;

    /// Errored plus clamped replicates, the report's `failures` column.
    [[nodiscard]] std::size_t failures() const noexcept { return errored + clamped; }
};

struct NminEntry {
    EstimatorId method;
    std::optional<std::size_t> nmin;
};

struct StudyReport {
    StudyConfig config;
    std::vector<StudyCell> cells;  // ordered by (h_grid index, length, estimator index)
    std::vector<NminEntry> nmin_table;  // in config.estimators order

    [[nodiscard]] const StudyCell* find(double h0, std::size_t n, EstimatorId method) const;
};

using Estimator = std::function<HurstEstimate(std::span<const double>)>;
/// Produces the estimator applied to every replicate of one series length.
using EstimatorFactory = std::function<Estimator(EstimatorId, std::size_t length)>;

/// Factory backed by EstimationPlan.
[[nodiscard]] EstimatorFactory default_estimator_factory();

/// Statistics for one cell from the estimates that succeeded.
[[nodiscard]] StudyCell summarize_cell(double h0, std::size_t n, EstimatorId method,
                                       std::span<const double> estimates, std::size_t errored,
                                       std::size_t clamped);

/// Seed of the (h0, 2^exponent) grid point; replicate i uses derive_seed(cell_seed, i).
/// Keyed by value, not grid position, so a point reproduces in any grid.
[[nodiscard]] std::uint64_t cell_seed(std::uint64_t base_seed, double h0, int exponent);

/// All estimator cells of one (h0, 2^exponent) grid point, on shared inputs.
[[nodiscard]] std::vector<StudyCell> run_grid_point(double h0, int exponent, std::size_t replicates,
                                                    std::span<const EstimatorId> estimators,
                                                    std::uint64_t base_seed,
                                                    const EstimatorFactory& factory);

[[nodiscard]] std::optional<std::size_t> derive_nmin(std::span<const StudyCell> cells);

[[nodiscard]] StudyReport run_study(const StudyConfig& config);
[[nodiscard]] StudyReport run_study(const StudyConfig& config, const EstimatorFactory& factory);

}  // namespace hurst
