#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hurst {

/// Hurst index, validated to lie in the open interval (0, 1).
class HurstParameter {
public:
    explicit HurstParameter(double value);

    [[nodiscard]] double value() const noexcept { return value_; }

    friend bool operator==(HurstParameter, HurstParameter) = default;

private:
    double value_;
};

/// Ordered, finite, non-empty sequence of real samples. Immutable once built.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> samples);
    TimeSeries(std::initializer_list<double> samples);

    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return samples_; }
    [[nodiscard]] const std::vector<double>& vector() const noexcept { return samples_; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return samples_[i]; }

    operator std::span<const double>() const noexcept { return samples_; }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::vector<double> samples_;
};

/// Block aggregation: non-overlapping means of `m` consecutive samples.
/// The trailing N mod m samples are discarded.
[[nodiscard]] TimeSeries aggregate(std::span<const double> x, std::size_t m);

/// Autocorrelation of an exactly second-order self-similar process at lag k.
[[nodiscard]] double exact_autocorrelation(HurstParameter h, std::size_t k);

/// Biased sample autocorrelation (normalised by the lag-0 sum of squares).
[[nodiscard]] double sample_autocorrelation(std::span<const double> x, std::size_t k);

struct SummaryStats {
    double mean;
    double stddev;  // n-1 denominator
};

[[nodiscard]] double mean(std::span<const double> values);

/// Sample variance with n-1 denominator; needs at least two values.
[[nodiscard]] double sample_variance(std::span<const double> values);

[[nodiscard]] SummaryStats summary_stats(std::span<const double> values);

/// Copy of `x` with its arithmetic mean removed.
[[nodiscard]] std::vector<double> centered(std::span<const double> x);

}  // namespace hurst
