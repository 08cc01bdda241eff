#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurst/regression.hpp"

namespace hurst {

enum class EstimatorId { RS, AggVar, Periodogram, Whittle, Wavelet };

inline constexpr std::array<EstimatorId, 5> kAllEstimators = {
    EstimatorId::RS, EstimatorId::AggVar, EstimatorId::Periodogram, EstimatorId::Whittle,
    EstimatorId::Wavelet,
};

/// Lower-case CLI/report name: rs, aggvar, periodogram, whittle, wavelet.
[[nodiscard]] std::string_view to_string(EstimatorId id) noexcept;
[[nodiscard]] std::optional<EstimatorId> parse_estimator(std::string_view name);

/// Shortest series any estimator accepts.
inline constexpr std::size_t kMinEstimationLength = 64;

/// Estimates outside (0, 1) are pulled back to these bounds and flagged.
inline constexpr double kClampLow = 0.01;
inline constexpr double kClampHigh = 0.99;

struct Diagnostics {
    double raw_h = 0.0;           // before clamping
    double slope = 0.0;           // regression slope (log-log methods)
    double intercept = 0.0;
    std::size_t points_used = 0;  // block sizes, levels, frequencies or octaves
    std::optional<double> objective;  // Whittle objective at the optimum
    bool clamped = false;
    bool boundary = false;        // Whittle optimum on the search boundary
};

struct HurstEstimate {
    EstimatorId method;
    double h_hat;
    Diagnostics diagnostics;
};

// Regression inputs for the log-log methods. Natural logs throughout.

/// (log n, log mean R/S) for block sizes n = 8, 16, ..., N/2.
[[nodiscard]] std::vector<LogLogPoint> rs_points(std::span<const double> x);

/// (log m, log Var(aggregate(x, m))) for m = 2, 4, ..., N/8.
[[nodiscard]] std::vector<LogLogPoint> aggvar_points(std::span<const double> x);

/// (log lambda_j, log I(lambda_j)) over the lowest `low_fraction` of the half spectrum.
[[nodiscard]] std::vector<LogLogPoint> periodogram_points(std::span<const double> x,
                                                          double low_fraction = 0.1);

/// Abry-Veitch logscale diagram: (octave j, bias-corrected log2 mu_j, n_j ln^2(2) / 2).
[[nodiscard]] std::vector<LogLogPoint> wavelet_points(std::span<const double> x);

/// Maps a fitted slope onto H for the given regression-based method and
/// applies the clamping policy. Whittle has no slope and is rejected.
[[nodiscard]] HurstEstimate hurst_from_fit(EstimatorId method, const LogLogFit& fit);

[[nodiscard]] HurstEstimate estimate_rs(std::span<const double> x);
[[nodiscard]] HurstEstimate estimate_aggvar(std::span<const double> x);
[[nodiscard]] HurstEstimate estimate_periodogram(std::span<const double> x, double low_fraction = 0.1);
[[nodiscard]] HurstEstimate estimate_whittle(std::span<const double> x);
[[nodiscard]] HurstEstimate estimate_wavelet(std::span<const double> x);

[[nodiscard]] HurstEstimate estimate(EstimatorId method, std::span<const double> x);

/// Profiled Whittle fit for fGn at one fixed series length.
///
/// Everything that depends only on N (frequencies, the fGn spectrum on the
/// 33-point bracketing grid) is computed once, so a model can be reused across
/// replicates of the same length. fit() returns exactly what
/// estimate_whittle() returns for the same input.
class WhittleModel {
public:
    static constexpr std::size_t kGridPoints = 33;
    static constexpr double kSearchLow = 0.01;
    static constexpr double kSearchHigh = 0.99;

    explicit WhittleModel(std::size_t length);

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] HurstEstimate fit(std::span<const double> x) const;

    /// Q(H) = log(mean_j I_j / f_j(H)) + mean_j log f_j(H); `pgram` as returned by periodogram().
    [[nodiscard]] double objective(std::span<const double> pgram, double h) const;

    /// Spectral values f*(lambda_j; H) on this model's frequencies, via the
    /// Chebyshev representation of the aliased sum used by objective().
    [[nodiscard]] std::vector<double> model_spectrum(double h) const;

private:
    struct Evaluation {
        double mean_ratio;
        double mean_log_f;
    };
    [[nodiscard]] std::vector<double> alias_coefficients(double h) const;

    std::size_t length_;
    std::vector<double> log_lambda_;
    std::vector<double> four_sin2_;
    std::vector<double> log_four_sin2_;
    std::vector<double> cheb_t_;
    std::vector<double> grid_h_;
    std::vector<double> grid_inv_f_;        // kGridPoints x frequencies, row-major
    std::vector<double> grid_mean_log_f_;
};

/// A method bound to one series length. Whittle plans share a WhittleModel;
/// other methods need no precomputation. Results equal estimate(method, x).
class EstimationPlan {
public:
    EstimationPlan(EstimatorId method, std::size_t length);

    [[nodiscard]] EstimatorId method() const noexcept { return method_; }
    [[nodiscard]] HurstEstimate operator()(std::span<const double> x) const;

private:
    EstimatorId method_;
    std::shared_ptr<const WhittleModel> whittle_;
};

}  // namespace hurst
