#pragma once

#include <cmath>

#include "borninfeld/errors.hpp"
#include "borninfeld/vec3.hpp"

namespace borninfeld {

/// Two opposite unit point charges on the z axis: +1 (proton) at
/// z = +r/2, -1 (electron) at z = -r/2. Gaussian-style atomic units
/// throughout: div D = 4 pi rho, Coulomb potential of a unit charge 1/s,
/// and the Born parameter beta carries dimension of length.
struct DipoleConfig {
    double separation;  ///< r = |s_p - s_e| > 0, Bohr radii
    double beta;        ///< Born parameter >= 0, Bohr radii

    DipoleConfig(double r, double b) : separation(r), beta(b) {
        if (!(std::isfinite(r) && r > 0.0))
            throw InvalidInputError("DipoleConfig: separation must be positive");
        if (!(std::isfinite(b) && b >= 0.0))
            throw InvalidInputError("DipoleConfig: beta must be non-negative");
    }

    Vec3 proton() const { return {0.0, 0.0, +0.5 * separation}; }
    Vec3 electron() const { return {0.0, 0.0, -0.5 * separation}; }
};

} // namespace borninfeld
