// Exact rational points and the handful of geometric predicates the
// toolkit needs. Decisions (orientation, sidedness, containment) are always
// made in rational arithmetic; lengths are the only inexact quantities.
#pragma once

#include "exsys/rational.hpp"

#include <array>
#include <cmath>
#include <ostream>

namespace exsys {

struct RVec3 {
    Rational x, y, z;

    Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    bool operator==(const RVec3&) const = default;

    friend RVec3 operator+(const RVec3& a, const RVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend RVec3 operator-(const RVec3& a, const RVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend RVec3 operator*(const Rational& s, const RVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline Rational dot(const RVec3& a, const RVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline RVec3 cross(const RVec3& a, const RVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rational norm2(const RVec3& a) { return dot(a, a); }

struct DVec3 {
    double x = 0, y = 0, z = 0;
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const double& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline DVec3 to_dvec(const RVec3& a) { return {to_double(a.x), to_double(a.y), to_double(a.z)}; }
inline double dist(const DVec3& a, const DVec3& b) {
    double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}
inline double length(const RVec3& a, const RVec3& b) {
    return std::sqrt(to_double(norm2(a - b)));
}

struct RVec2 {
    Rational x, y;
    bool operator==(const RVec2&) const = default;
    auto operator<=>(const RVec2&) const = default;
    friend RVec2 operator+(const RVec2& a, const RVec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend RVec2 operator-(const RVec2& a, const RVec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend RVec2 operator*(const Rational& s, const RVec2& a) { return {s * a.x, s * a.y}; }
};

inline Rational cross2(const RVec2& a, const RVec2& b) { return a.x * b.y - a.y * b.x; }

// Sign of the signed area of (a, b, c): +1 counterclockwise.
inline int orient2d(const RVec2& a, const RVec2& b, const RVec2& c) {
    return sign(cross2(b - a, c - a));
}

inline Rational dot2(const RVec2& a, const RVec2& b) { return a.x * b.x + a.y * b.y; }

// Does segment [a, b] contain p strictly in its interior?
inline bool strictly_between(const RVec2& a, const RVec2& b, const RVec2& p) {
    if (orient2d(a, b, p) != 0) return false;
    return dot2(b - a, p - a) > 0 && dot2(a - b, p - b) > 0;
}

}  // namespace exsys
