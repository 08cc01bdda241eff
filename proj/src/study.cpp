#include "hurst/study.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "hurst/error.hpp"
#include "hurst/fgn.hpp"
#include "hurst/parallel.hpp"
#include "hurst/random.hpp"
#include "hurst/timeseries.hpp"

namespace hurst {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool good_enough(QualityClass q) {
    return q == QualityClass::HighPrecision || q == QualityClass::Acceptable;
}

}  // namespace

std::string_view to_string(QualityClass q) noexcept {
    switch (q) {
        case QualityClass::HighPrecision: return "high-precision";
        case QualityClass::Acceptable: return "acceptable";
        case QualityClass::Biased: return "biased";
        case QualityClass::Unclassified: return "unclassified";
    }
    return "unknown";
}

QualityClass classify(double bias, double sigma) {
    if (std::isnan(bias) || std::isnan(sigma)) {
        return QualityClass::Unclassified;
    }
    const double b = std::abs(bias);
    using T = QualityThresholds;
    if (b <= T::kHighBias && sigma <= T::kHighSigma) {
        return QualityClass::HighPrecision;
    }
    if (b <= T::kAcceptableBias && sigma <= T::kAcceptableSigma) {
        return QualityClass::Acceptable;
    }
    if (b > T::kBiased) {
        return QualityClass::Biased;
    }
    return QualityClass::Unclassified;
}

void StudyConfig::validate() const {
    if (h_grid.empty() || length_exponents.empty() || estimators.empty()) {
        throw InvalidArgument("study grid, lengths and estimators must be non-empty");
    }
    for (double h : h_grid) {
        (void)HurstParameter(h);
    }
    if (std::set<double>(h_grid.begin(), h_grid.end()).size() != h_grid.size()) {
        throw InvalidArgument("duplicate Hurst value in study grid");
    }
    for (int e : length_exponents) {
        if (e < 6 || e > 30) {
            throw InvalidArgument("length exponent " + std::to_string(e) + " outside [6, 30]");
        }
    }
    if (std::set<int>(length_exponents.begin(), length_exponents.end()).size() != length_exponents.size()) {
        throw InvalidArgument("duplicate length exponent");
    }
    if (std::set<EstimatorId>(estimators.begin(), estimators.end()).size() != estimators.size()) {
        throw InvalidArgument("duplicate estimator");
    }
    if (replicates < 2) {
        throw InvalidArgument("a study needs at least 2 replicates per cell");
    }
}

const StudyCell* StudyReport::find(double h0, std::size_t n, EstimatorId method) const {
    for (const auto& c : cells) {
        if (c.h0 == h0 && c.n == n && c.method == method) {
            return &c;
        }
    }
    return nullptr;
}

EstimatorFactory default_estimator_factory() {
    return [](EstimatorId method, std::size_t length) -> Estimator {
        return [plan = EstimationPlan(method, length)](std::span<const double> x) { return plan(x); };
    };
}

StudyCell summarize_cell(double h0, std::size_t n, EstimatorId method, std::span<const double> estimates,
                         std::size_t errored, std::size_t clamped) {
    StudyCell cell{h0, n, method, kNaN, kNaN, kNaN, kNaN, estimates.size(), errored, clamped,
                   QualityClass::Unclassified};
    const std::size_t r = estimates.size();
    if (r >= 1) {
        // Offsets from the first estimate keep identical estimates exact.
        const double ref = estimates.front();
        double shift = 0.0;
        for (double e : estimates) {
            shift += e - ref;
        }
        const double mu = ref + shift / static_cast<double>(r);
        double sq = 0.0;
        double dev = 0.0;
        for (double e : estimates) {
            sq += (e - h0) * (e - h0);
            dev += (e - mu) * (e - mu);
        }
        cell.bias = h0 - mu;
        cell.mse = sq / static_cast<double>(r);
        cell.rmse = std::sqrt(cell.mse);
        if (r >= 2) {
            cell.sigma = std::sqrt(dev / static_cast<double>(r - 1));
        }
    }
    // More than half of the replicates failing makes the statistics meaningless.
    if (2 * errored <= r + errored) {
        cell.quality = classify(cell.bias, cell.sigma);
    }
    return cell;
}

std::uint64_t cell_seed(std::uint64_t base_seed, double h0, int exponent) {
    const auto h_key = static_cast<std::uint64_t>(std::llround(h0 * 1e6));
    return derive_seed(derive_seed(base_seed, h_key), static_cast<std::uint64_t>(exponent));
}

std::vector<StudyCell> run_grid_point(double h0, int exponent, std::size_t replicates,
                                      std::span<const EstimatorId> estimators, std::uint64_t base_seed,
                                      const EstimatorFactory& factory) {
    const std::size_t n = std::size_t{1} << exponent;
    const FgnGenerator generator(HurstParameter(h0), n);
    const std::uint64_t seed = cell_seed(base_seed, h0, exponent);

    std::vector<Estimator> methods;
    methods.reserve(estimators.size());
    for (auto id : estimators) {
        methods.push_back(factory(id, n));
    }
    std::vector<std::vector<double>> values(estimators.size());
    std::vector<std::size_t> errored(estimators.size(), 0);
    std::vector<std::size_t> clamped(estimators.size(), 0);

    for (std::size_t i = 0; i < replicates; ++i) {
        const auto series = generator.sample(derive_seed(seed, i));
        for (std::size_t e = 0; e < methods.size(); ++e) {
            try {
                const auto est = methods[e](series.values());
                values[e].push_back(est.h_hat);
                if (est.diagnostics.clamped) {
                    ++clamped[e];
                }
            } catch (const Error&) {
                ++errored[e];
            }
        }
    }

    std::vector<StudyCell> cells;
    cells.reserve(estimators.size());
    for (std::size_t e = 0; e < estimators.size(); ++e) {
        cells.push_back(summarize_cell(h0, n, estimators[e], values[e], errored[e], clamped[e]));
    }
    return cells;
}

std::optional<std::size_t> derive_nmin(std::span<const StudyCell> cells) {
    std::set<std::size_t> lengths;
    for (const auto& c : cells) {
        lengths.insert(c.n);
    }
    for (std::size_t candidate : lengths) {
        const bool holds = std::all_of(cells.begin(), cells.end(), [&](const StudyCell& c) {
            return c.n < candidate || good_enough(c.quality);
        });
        if (holds) {
            return candidate;
        }
    }
    return std::nullopt;
}

StudyReport run_study(const StudyConfig& config) {
    return run_study(config, default_estimator_factory());
}

StudyReport run_study(const StudyConfig& config, const EstimatorFactory& factory) {
    config.validate();
    auto exponents = config.length_exponents;
    std::sort(exponents.begin(), exponents.end());

    const std::size_t points = config.h_grid.size() * exponents.size();
    std::vector<std::vector<StudyCell>> results(points);
    // Largest lengths first so the long cells do not trail at the end.
    parallel_for(points, config.jobs, [&](std::size_t k) {
        const std::size_t slot = points - 1 - k;
        const std::size_t hi = slot / exponents.size();
        const std::size_t ei = slot % exponents.size();
        results[slot] = run_grid_point(config.h_grid[hi], exponents[ei], config.replicates, config.estimators,
                                       config.base_seed, factory);
    });

    StudyReport report;
    report.config = config;
    report.config.length_exponents = exponents;
    for (auto& point : results) {
        for (auto& cell : point) {
            report.cells.push_back(cell);
        }
    }
    for (auto id : config.estimators) {
        std::vector<StudyCell> mine;
        for (const auto& c : report.cells) {
            if (c.method == id) {
                mine.push_back(c);
            }
        }
        report.nmin_table.push_back({id, derive_nmin(mine)});
    }
    return report;
}

}  // namespace hurst
