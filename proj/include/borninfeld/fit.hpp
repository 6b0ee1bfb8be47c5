#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "borninfeld/errors.hpp"

namespace borninfeld {

/// Least-squares slope of ln|y| against ln(x). Used for the beta-scaling
/// diagnostics (expected exponents show up as the slope).
inline double fit_loglog_slope(const std::vector<std::pair<double, double>>& xy) {
    if (xy.size() < 2)
        throw InvalidInputError("fit_loglog_slope: need at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : xy) {
        if (!(x > 0.0) || y == 0.0 || !std::isfinite(x) || !std::isfinite(y))
            throw InvalidInputError("fit_loglog_slope: points must be positive/nonzero");
        const double lx = std::log(x), ly = std::log(std::abs(y));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(xy.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace borninfeld
