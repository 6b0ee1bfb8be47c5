#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "borninfeld/errors.hpp"

namespace borninfeld {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  ///< estimated absolute error
    int panels = 0;
};

namespace qk {

// Gauss-Kronrod 7-15 nodes and weights on [-1,1] (QUADPACK dqk15).
inline constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

/// One 15-point Kronrod panel on [a,b]; never evaluates the endpoints.
template <class F>
QuadResult panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double k15 = wgk[7] * fc;
    double g7 = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * xgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        k15 += wgk[i] * fsum;
        if (i % 2 == 1) g7 += wg[i / 2] * fsum;
    }
    k15 *= h;
    g7 *= h;

    double err = std::abs(k15 - g7) * 200.0;
    err = std::abs(h) * 2.0 * std::min(1.0, std::sqrt(err) * err);
    // roundoff floor
    err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * std::abs(k15));
    return {k15, err, 1};
}

}  // namespace qk

/// Adaptive Gauss-Kronrod integration of f over the union of intervals
/// defined by `points` (sorted abscissae; each consecutive pair is one
/// initial panel). Extra interior points force subdivision there, which
/// is how kinks (e.g. a charge crossing on a line integral) are handled.
/// Splits the worst panel first until the summed error estimate is below
/// `tol` or the panel budget runs out, in which case an AccuracyError
/// carrying the achieved estimate is thrown.
template <class F>
QuadResult integrate(F&& f, const std::vector<double>& points, double tol,
                     int max_panels = 40000) {
    if (points.size() < 2)
        throw InvalidInputError("integrate: need at least one interval");
    if (!(tol > 0.0))
        throw InvalidInputError("integrate: tolerance must be positive");

    struct Panel {
        double err, a, b, val;
        std::uint64_t seq;
        bool operator<(const Panel& o) const {
            if (err != o.err) return err < o.err;
            return seq > o.seq;  // older first on ties, deterministic
        }
    };

    std::priority_queue<Panel> q;
    std::uint64_t seq = 0;
    double total = 0.0, total_err = 0.0;
    int panels = 0;

    auto push = [&](double a, double b) {
        const QuadResult r = qk::panel(f, a, b);
        q.push(Panel{r.error, a, b, r.value, seq++});
        total += r.value;
        total_err += r.error;
        ++panels;
    };

    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i] < points[i + 1]))
            throw InvalidInputError("integrate: points must be strictly increasing");
        push(points[i], points[i + 1]);
    }

    double accepted_err = 0.0;  // panels at floating-point resolution
    while (total_err + accepted_err > tol && !q.empty()) {
        const Panel worst = q.top();
        const double mid = 0.5 * (worst.a + worst.b);
        q.pop();
        if (!(worst.a < mid && mid < worst.b)) {
            // interval at floating-point resolution; cannot refine further
            total_err -= worst.err;
            accepted_err += worst.err;
            continue;
        }
        if (panels + 2 > max_panels)
            throw AccuracyError("integrate: panel budget exhausted",
                                total_err + accepted_err);
        total -= worst.val;
        total_err -= worst.err;
        --panels;
        push(worst.a, mid);
        push(mid, worst.b);
    }

    return {total, total_err + accepted_err, panels};
}

}  // namespace borninfeld
