#pragma once

#include <vector>

namespace hurst {

struct LogLogPoint {
    double x;  // log abscissa
    double y;  // log ordinate
    double weight = 1.0;
};

struct LogLogFit {
    std::vector<LogLogPoint> points;
    double slope;
    double intercept;
};

/// Weighted least-squares line through at least three points with positive weights.
/// Unit weights give ordinary least squares.
[[nodiscard]] LogLogFit fit_weighted_least_squares(std::vector<LogLogPoint> points);

}  // namespace hurst
