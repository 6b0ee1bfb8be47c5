#pragma once

// Test-only reference integrator, kept independent of the library's
// Gauss-Kronrod engine: classic recursive adaptive Simpson.

#include <cmath>
#include <functional>

namespace testoracle {

inline double simpson(const std::function<double(double)>& f, double a, double m,
                      double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double m,
                    double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, lm, m, fa, flm, fm);
    const double right = simpson(f, m, rm, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson on [a,b] to absolute tolerance tol.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adapt(f, a, m, b, fa, fm, fb, simpson(f, a, m, b, fa, fm, fb), tol,
                 max_depth);
}

/// Reference single-charge Born potential: direct Simpson over [s, T]
/// plus the analytic large-t tail 1/T - beta^4/(10 T^5). A different
/// route than the library's compactified Gauss-Kronrod evaluation.
inline double born_potential_reference(double s, double beta, double tol = 1e-11) {
    const double T = 1.0e4 * (1.0 + beta) + 10.0 * s;
    const auto f = [beta](double t) {
        const double t2 = t * t, b2 = beta * beta;
        return 1.0 / std::hypot(t2, b2);
    };
    const double b4 = beta * beta * beta * beta;
    const double tail = 1.0 / T - b4 / (10.0 * T * T * T * T * T);
    return integrate(f, s, T, tol) + tail;
}

}  // namespace testoracle
