#pragma once

#include <cmath>

#include "borninfeld/errors.hpp"
#include "borninfeld/vec3.hpp"

namespace borninfeld {

// Born-Infeld constitutive pair. With E = -grad(phi),
//     D = E / sqrt(1 - beta^4 |E|^2),   E = D / sqrt(1 + beta^4 |D|^2).
// The field strength saturates: beta^2 |E| < 1 strictly, while |D| is
// unbounded. beta = 0 is the Maxwell limit D = E.

/// Field strength from displacement. Always well defined; |E| < 1/beta^2.
inline Vec3 e_from_d(const Vec3& D, double beta) {
    if (!D.finite() || !std::isfinite(beta) || beta < 0.0)
        throw InvalidInputError("e_from_d: non-finite input or negative beta");
    const double b2 = beta * beta;
    // Written as D / sqrt(1 + (b^2 |D|)^2) to survive |D| up to ~1e154.
    const double m = b2 * D.norm();
    return D / std::sqrt(1.0 + m * m);
}

/// Displacement from field strength. Requires beta^2 |E| < 1.
inline Vec3 d_from_e(const Vec3& E, double beta) {
    if (!E.finite() || !std::isfinite(beta) || beta < 0.0)
        throw InvalidInputError("d_from_e: non-finite input or negative beta");
    const double b2 = beta * beta;
    const double m = b2 * E.norm();
    if (m >= 1.0)
        throw DomainError("d_from_e: field exceeds Born saturation (beta^2|E| >= 1)");
    return E / std::sqrt((1.0 - m) * (1.0 + m));
}

/// One sampled point of a displacement/field-strength pair.
struct FieldSample {
    Vec3 point;
    Vec3 D;
    Vec3 E;

    static FieldSample from_displacement(const Vec3& point, const Vec3& D, double beta) {
        return {point, D, e_from_d(D, beta)};
    }
};

} // namespace borninfeld
