#include "hurst/regression.hpp"

#include <cmath>

#include "hurst/error.hpp"

namespace hurst {

LogLogFit fit_weighted_least_squares(std::vector<LogLogPoint> points) {
    if (points.size() < 3) {
        throw InsufficientData("regression needs at least 3 points, got " + std::to_string(points.size()));
    }
    double sw = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    for (const auto& p : points) {
        if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
            throw InvalidArgument("regression weights must be positive and finite");
        }
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw DegenerateInput("non-finite regression point");
        }
        sw += p.weight;
        sx += p.weight * p.x;
        sy += p.weight * p.y;
    }
    const double xbar = sx / sw;
    const double ybar = sy / sw;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : points) {
        const double dx = p.x - xbar;
        sxx += p.weight * dx * dx;
        sxy += p.weight * dx * (p.y - ybar);
    }
    if (!(sxx > 0.0)) {
        throw DegenerateInput("regression abscissas are all equal");
    }
    const double slope = sxy / sxx;
    return LogLogFit{std::move(points), slope, ybar - slope * xbar};
}

}  // namespace hurst
