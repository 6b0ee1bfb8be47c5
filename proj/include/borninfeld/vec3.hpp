#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "borninfeld/errors.hpp"

namespace borninfeld {

/// Cartesian point / vector, lengths in Bohr radii.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double a) const { return {a * x, a * y, a * z}; }
    Vec3 operator/(double a) const { return {x / a, y / a, z / a}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double a, const Vec3& v) { return v * a; }

/// Ordered polyline through 3-space. Closed paths repeat the first
/// waypoint at the end.
struct Path {
    std::vector<Vec3> waypoints;
    bool closed = false;

    static Path open(std::vector<Vec3> pts) {
        if (pts.size() < 2)
            throw InvalidInputError("Path: need at least 2 waypoints");
        for (const auto& p : pts)
            if (!p.finite()) throw InvalidInputError("Path: non-finite waypoint");
        return Path{std::move(pts), false};
    }

    static Path loop(std::vector<Vec3> pts) {
        if (pts.size() < 2)
            throw InvalidInputError("Path: need at least 2 waypoints");
        for (const auto& p : pts)
            if (!p.finite()) throw InvalidInputError("Path: non-finite waypoint");
        const Vec3 d = pts.front() - pts.back();
        if (d.norm() != 0.0)
            throw InvalidInputError("Path: closed path must end at its first waypoint");
        return Path{std::move(pts), true};
    }
};

} // namespace borninfeld
