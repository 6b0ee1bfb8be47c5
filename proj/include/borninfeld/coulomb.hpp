#pragma once

#include <cmath>

#include "borninfeld/constitutive.hpp"
#include "borninfeld/dipole.hpp"
#include "borninfeld/errors.hpp"
#include "borninfeld/vec3.hpp"

namespace borninfeld {

/// Exact two-charge Coulomb displacement
///     D_C(s) = (s - s_p)/|s - s_p|^3 - (s - s_e)/|s - s_e|^3.
/// This is the leading order in beta of the true displacement field.
inline Vec3 coulomb_displacement(const Vec3& s, const DipoleConfig& cfg) {
    if (!s.finite()) throw InvalidInputError("coulomb_displacement: non-finite point");
    const Vec3 dp = s - cfg.proton();
    const Vec3 de = s - cfg.electron();
    const double np = dp.norm(), ne = de.norm();
    if (np == 0.0 || ne == 0.0)
        throw SingularityError("coulomb_displacement: evaluation at a charge location");
    return dp / (np * np * np) - de / (ne * ne * ne);
}

/// Coulomb-approximation field strength E = e_from_d(D_C, beta).
/// Bounded by 1/beta^2 everywhere, including arbitrarily close to the
/// charges, where it saturates.
inline Vec3 approx_field(const Vec3& s, const DipoleConfig& cfg) {
    return e_from_d(coulomb_displacement(s, cfg), cfg.beta);
}

/// Analytic Coulomb pair potential phi_C = 1/|s-s_p| - 1/|s-s_e|
/// (the beta = 0 solution; also the outer Dirichlet trace of the solver).
inline double coulomb_pair_potential(const Vec3& s, const DipoleConfig& cfg) {
    const double np = (s - cfg.proton()).norm();
    const double ne = (s - cfg.electron()).norm();
    if (np == 0.0 || ne == 0.0)
        throw SingularityError("coulomb_pair_potential: evaluation at a charge location");
    return 1.0 / np - 1.0 / ne;
}

}  // namespace borninfeld
