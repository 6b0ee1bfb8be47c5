#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "borninfeld/coulomb.hpp"
#include "borninfeld/dipole.hpp"
#include "borninfeld/errors.hpp"
#include "borninfeld/quadrature.hpp"
#include "borninfeld/vec3.hpp"

namespace borninfeld {

namespace detail {

/// Quadrature breakpoints in [0,1] for one segment P + t(Q-P): forces a
/// split at the closest approach to each charge (the integrand has a
/// saturation layer of width ~beta there) plus a geometric ladder of
/// offsets so the adaptive cascade starts close to the layer.
inline std::vector<double> segment_breakpoints(const Vec3& P, const Vec3& Q,
                                               const DipoleConfig& cfg) {
    std::vector<double> pts{0.0, 1.0};
    const Vec3 d = Q - P;
    const double len2 = d.norm2();
    if (len2 == 0.0) return pts;
    const double len = std::sqrt(len2);
    for (const Vec3& c : {cfg.proton(), cfg.electron()}) {
        const double tstar = (c - P).dot(d) / len2;
        const double layer = std::max(cfg.beta, 1e-6 * len);
        for (double off : {0.0, -1.0, 1.0, -8.0, 8.0, -64.0, 64.0}) {
            const double t = tstar + off * layer / len;
            if (t > 1e-12 && t < 1.0 - 1e-12) pts.push_back(t);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

template <class FieldFn>
double path_integral(const Path& path, const DipoleConfig& cfg, double tol,
                     FieldFn&& field) {
    const std::size_t nseg = path.waypoints.size() - 1;
    double sum = 0.0;
    for (std::size_t k = 0; k < nseg; ++k) {
        const Vec3 P = path.waypoints[k];
        const Vec3 Q = path.waypoints[k + 1];
        const Vec3 d = Q - P;
        if (d.norm2() == 0.0) continue;
        const auto integrand = [&](double t) { return field(P + t * d).dot(d); };
        const QuadResult r =
            integrate(integrand, segment_breakpoints(P, Q, cfg),
                      tol / static_cast<double>(nseg));
        sum += r.value;
    }
    return sum;
}

inline void check_not_at_charge(const Vec3& p, const DipoleConfig& cfg,
                                const char* who) {
    if ((p - cfg.proton()).norm() == 0.0 || (p - cfg.electron()).norm() == 0.0)
        throw SingularityError(std::string(who) + ": waypoint at a charge location");
}

}  // namespace detail

/// Potential of the Coulomb-approximation field at the last waypoint of
/// an open path, taking the first waypoint (the far end) as the zero
/// reference:  phi(end) = -int_path E_approx . dl.
///
/// The integrand is bounded by 1/beta^2, so for beta > 0 the path may end
/// at a charge location (the quadrature takes the one-sided limit). For
/// beta = 0 the field is singular there and the endpoint must keep a
/// finite distance.
inline double line_integral_potential(const Path& path, const DipoleConfig& cfg,
                                      double tol) {
    if (path.closed)
        throw InvalidInputError("line_integral_potential: path must be open");
    if (cfg.beta == 0.0) {
        detail::check_not_at_charge(path.waypoints.front(), cfg,
                                    "line_integral_potential");
        detail::check_not_at_charge(path.waypoints.back(), cfg,
                                    "line_integral_potential");
    }
    const double integral = detail::path_integral(
        path, cfg, tol, [&](const Vec3& s) { return approx_field(s, cfg); });
    return -integral;
}

/// Closed-loop circulation of the Coulomb-approximation field. This is
/// the quantity whose non-vanishing at beta > 0 makes the approximate
/// potential path dependent; it is zero (within tolerance) at beta = 0.
inline double circulation(const Path& loop, const DipoleConfig& cfg, double tol) {
    if (!loop.closed)
        throw InvalidInputError("circulation: path must be closed");
    for (const Vec3& p : loop.waypoints)
        detail::check_not_at_charge(p, cfg, "circulation");
    return detail::path_integral(loop, cfg, tol,
                                 [&](const Vec3& s) { return approx_field(s, cfg); });
}

}  // namespace borninfeld
