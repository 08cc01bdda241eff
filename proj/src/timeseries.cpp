#include "hurst/timeseries.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hurst/error.hpp"

namespace hurst {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::DegenerateInput: return "degenerate-input";
        case ErrorKind::InsufficientData: return "insufficient-data";
        case ErrorKind::EmbeddingFailure: return "embedding-failure";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Ordering: return "ordering";
    }
    return "unknown";
}

HurstParameter::HurstParameter(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0)) {
        throw InvalidArgument("Hurst index must lie in (0, 1), got " + std::to_string(value));
    }
}

TimeSeries::TimeSeries(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw InvalidArgument("time series must contain at least one sample");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!std::isfinite(samples_[i])) {
            throw InvalidArgument("non-finite sample at index " + std::to_string(i));
        }
    }
}

TimeSeries::TimeSeries(std::initializer_list<double> samples)
    : TimeSeries(std::vector<double>(samples)) {}

TimeSeries aggregate(std::span<const double> x, std::size_t m) {
    if (m == 0) {
        throw InvalidArgument("aggregation level must be >= 1");
    }
    if (m > x.size()) {
        throw InvalidArgument("aggregation level " + std::to_string(m) + " exceeds series length " +
                              std::to_string(x.size()));
    }
    const std::size_t blocks = x.size() / m;
    std::vector<double> out(blocks);
    const double inv = 1.0 / static_cast<double>(m);
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto block = x.subspan(b * m, m);
        out[b] = std::accumulate(block.begin(), block.end(), 0.0) * inv;
    }
    return TimeSeries(std::move(out));
}

double exact_autocorrelation(HurstParameter h, std::size_t k) {
    if (k == 0) {
        return 1.0;
    }
    const double two_h = 2.0 * h.value();
    const double kd = static_cast<double>(k);
    return 0.5 * (std::pow(kd + 1.0, two_h) - 2.0 * std::pow(kd, two_h) + std::pow(kd - 1.0, two_h));
}

double mean(std::span<const double> values) {
    if (values.empty()) {
        throw InsufficientData("mean of an empty sequence");
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
    if (values.size() < 2) {
        throw InsufficientData("sample variance needs at least 2 values");
    }
    const double mu = mean(values);
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mu) * (v - mu);
    }
    return ss / static_cast<double>(values.size() - 1);
}

SummaryStats summary_stats(std::span<const double> values) {
    return {mean(values), std::sqrt(sample_variance(values))};
}

std::vector<double> centered(std::span<const double> x) {
    const double mu = mean(x);
    std::vector<double> out(x.begin(), x.end());
    for (double& v : out) {
        v -= mu;
    }
    return out;
}

double sample_autocorrelation(std::span<const double> x, std::size_t k) {
    if (k >= x.size()) {
        throw InvalidArgument("lag " + std::to_string(k) + " must be smaller than the series length");
    }
    const auto d = centered(x);
    double denom = 0.0;
    for (double v : d) {
        denom += v * v;
    }
    if (denom == 0.0) {
        throw DegenerateInput("autocorrelation of a constant series is undefined");
    }
    double num = 0.0;
    for (std::size_t t = 0; t + k < d.size(); ++t) {
        num += d[t] * d[t + k];
    }
    return num / denom;
}

}  // namespace hurst
