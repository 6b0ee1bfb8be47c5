#pragma once

#include <algorithm>
#include <cmath>

#include "borninfeld/errors.hpp"
#include "borninfeld/quadrature.hpp"

namespace borninfeld {

// The unique spherically symmetric solution of the Born-Infeld equation
// with one unit point source:
//     phi(s) = int_s^inf dt / sqrt(t^4 + beta^4),
// finite at s = 0 (value Gamma(1/4)^2/(4 sqrt(pi)) / beta) and reducing
// to the Coulomb potential 1/s at beta = 0.

/// Radial field-strength magnitude of the single unit charge,
/// |E|(s) = 1/sqrt(s^4 + beta^4). Saturates at 1/beta^2.
inline double born_single_field(double s, double beta) {
    const double s2 = s * s, b2 = beta * beta;
    return 1.0 / std::hypot(s2, b2);
}

/// Single-unit-charge Born potential at radius s.
///
/// Evaluated with the tail-compactifying substitution t = s + u^2/(1-u),
/// which maps [0,1) onto [s,inf) and leaves a bounded, smooth integrand:
///     dt/du / sqrt(t^4+beta^4)
///       = u(2-u)/(s(1-u)+u^2)^2 / sqrt(1 + (beta(1-u)/(s(1-u)+u^2))^4)
/// up to the beta^4 term under the root. The beta = 0 branch returns 1/s
/// exactly.
inline double exact_born_potential(double s, double beta, double rel_tol = 1e-12) {
    if (!(std::isfinite(s) && std::isfinite(beta)) || s < 0.0 || beta < 0.0)
        throw InvalidInputError("exact_born_potential: need finite s >= 0, beta >= 0");
    if (s == 0.0 && beta == 0.0)
        throw DomainError("exact_born_potential: s = beta = 0 is singular");
    if (beta == 0.0) return 1.0 / s;

    const auto integrand = [s, beta](double u) {
        const double w = s * (1.0 - u) + u * u;     // = t * (1-u)
        const double base = u * (2.0 - u) / (w * w);  // dt/du / t^2
        const double q = beta * (1.0 - u) / w;        // beta / t
        const double q2 = q * q;
        return base / std::sqrt(1.0 + q2 * q2);
    };

    // scale of the result, for the absolute tolerance of the quadrature
    const double scale = (s > 0.0) ? std::min(1.0 / s, 1.8541 / beta) : 1.8541 / beta;
    const QuadResult r =
        integrate(integrand, {0.0, 0.25, 0.5, 0.75, 1.0}, rel_tol * scale);
    return r.value;
}

}  // namespace borninfeld
