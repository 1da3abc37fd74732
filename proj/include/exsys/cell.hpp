// Cells of the cubical lattice complex X: dimension, integer anchor (minimal
// corner) and the set of spanned axes. The lattice is conceptually infinite;
// cells are pure keys and carry no allocation.
#pragma once

#include "exsys/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace exsys {

enum Axis : int { AxisX = 0, AxisY = 1, AxisZ = 2 };

inline constexpr char axis_letter(int a) { return a == 0 ? 'x' : (a == 1 ? 'y' : 'z'); }

using IVec3 = std::array<std::int64_t, 3>;

inline IVec3 operator+(IVec3 a, const IVec3& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
}
inline IVec3 operator-(IVec3 a, const IVec3& b) {
    for (int i = 0; i < 3; ++i) a[i] -= b[i];
    return a;
}
inline IVec3 unit_ivec(int axis) {
    IVec3 v{0, 0, 0};
    v[axis] = 1;
    return v;
}

struct Cell {
    std::int8_t dim = 0;
    IVec3 anchor{0, 0, 0};
    std::uint8_t axes = 0;  // bitmask over {x,y,z}; popcount == dim

    auto operator<=>(const Cell&) const = default;

    bool has_axis(int a) const { return (axes >> a) & 1; }

    static Cell vertex(IVec3 p) { return Cell{0, p, 0}; }
    static Cell edge(IVec3 p, int axis) { return Cell{1, p, std::uint8_t(1u << axis)}; }
    static Cell square(IVec3 p, int axis_a, int axis_b) {
        if (axis_a == axis_b) throw std::invalid_argument("square: equal axes");
        return Cell{2, p, std::uint8_t((1u << axis_a) | (1u << axis_b))};
    }
    static Cell cube(IVec3 p) { return Cell{3, p, 0b111}; }
};

inline int popcount8(std::uint8_t m) {
    int c = 0;
    while (m) { c += m & 1; m >>= 1; }
    return c;
}

inline bool cell_well_formed(const Cell& c) {
    return c.dim >= 0 && c.dim <= 3 && popcount8(c.axes) == c.dim;
}

// Axes of a cell in ascending order.
inline std::array<int, 3> cell_axes(const Cell& c, int& n) {
    std::array<int, 3> out{};
    n = 0;
    for (int a = 0; a < 3; ++a)
        if (c.has_axis(a)) out[n++] = a;
    return out;
}

// Axis normal to a square.
inline int square_normal(const Cell& sq) {
    for (int a = 0; a < 3; ++a)
        if (!sq.has_axis(a)) return a;
    throw std::logic_error("square_normal: not a 2-cell");
}

// In-plane axes of a square in the cyclic orientation convention: the
// ordered pair (a, b) with a -> b -> normal following x -> y -> z -> x.
// {x,y} -> (x,y), {y,z} -> (y,z), {x,z} -> (z,x).
inline std::pair<int, int> square_frame(const Cell& sq) {
    int n = square_normal(sq);
    int a = (n + 1) % 3;
    int b = (n + 2) % 3;
    return {a, b};
}

inline std::string cell_axes_string(const Cell& c) {
    std::string s;
    for (int a = 0; a < 3; ++a)
        if (c.has_axis(a)) s += axis_letter(a);
    if (s.empty()) s = "-";
    return s;
}

// Placement of the lattice in R^3: vertex k sits at offset + spacing * k.
struct Lattice {
    Rational spacing = 1;
    std::array<Rational, 3> offset{Rational(0), Rational(0), Rational(0)};

    Rational plane_coord(int axis, std::int64_t k) const { return offset[axis] + spacing * k; }
    // Index of the interval [k, k+1) containing t on the given axis.
    Int cell_index(int axis, const Rational& t) const {
        return floor_rat((t - offset[axis]) / spacing);
    }
};

}  // namespace exsys
