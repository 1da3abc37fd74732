// Test-only oracles, independent of the production algorithms they check.
//
// min_linf_filling: exact minimal L-infinity multiplicity over fillings of
// a lattice 1-cycle supported in a cube box. Any two box-supported fillings
// differ by the boundary of a box-supported 3-chain, and each square has at
// most two incident cubes, so "does a filling of multiplicity <= k exist"
// is a system of difference constraints on cube potentials, solved exactly
// by Bellman-Ford (integral when feasible). Binary search over k gives the
// optimum.
#pragma once

#include "exsys/chain.hpp"
#include "exsys/lattice_loop.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace exsys::testoracle {

struct Box {
    IVec3 lo{0, 0, 0};  // cube anchors range over [lo, hi) per coordinate
    IVec3 hi{0, 0, 0};
};

// Bounding box of a loop's vertices, as a cube-anchor box.
inline Box loop_box(const LatticeLoop& loop) {
    Box b;
    auto vs = loop.vertices();
    b.lo = b.hi = vs.front();
    for (const auto& v : vs)
        for (int k = 0; k < 3; ++k) {
            b.lo[k] = std::min(b.lo[k], v[k]);
            b.hi[k] = std::max(b.hi[k], v[k]);
        }
    for (int k = 0; k < 3; ++k)
        if (b.hi[k] == b.lo[k]) b.hi[k]++;  // flat loop still needs one cube layer
    return b;
}

// Independent particular filling: hang a vertical wall from every horizontal
// edge down to the base plane z = zmin (telescoping squares), which reduces
// the cycle to a planar one at z = zmin; fill that by winding numbers.
inline LatticeChain cone_filling(const LatticeChain& alpha) {
    if (!boundary(alpha).zero()) throw std::invalid_argument("cone_filling: not a cycle");
    if (alpha.zero()) return LatticeChain(2);
    std::int64_t zmin = std::numeric_limits<std::int64_t>::max();
    for (const auto& [e, c] : alpha.terms()) zmin = std::min(zmin, e.anchor[2]);

    LatticeChain fill(2);
    for (const auto& [e, c] : alpha.terms()) {
        int n = 0;
        auto ax = cell_axes(e, n);
        if (ax[0] == AxisZ) continue;
        for (std::int64_t z = zmin; z < e.anchor[2]; ++z) {
            IVec3 a = e.anchor;
            a[2] = z;
            Cell sq = Cell::square(a, ax[0], AxisZ);
            IVec3 top = e.anchor;
            top[2] = z + 1;
            Int coeff_of_top = boundary_cell(sq).coeff(Cell::edge(top, ax[0]));
            fill.add(sq, c * coeff_of_top);  // column telescopes; top edge gets +c
        }
    }

    LatticeChain remaining = alpha - boundary(fill);
    if (!remaining.zero()) {
        std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
        bool first = true;
        for (const auto& [e, c] : remaining.terms()) {
            if (e.anchor[2] != zmin || e.has_axis(AxisZ))
                throw std::logic_error("cone_filling: projection not planar");
            if (first) { xmin = xmax = e.anchor[0]; ymin = ymax = e.anchor[1]; first = false; }
            xmin = std::min(xmin, e.anchor[0]); xmax = std::max(xmax, e.anchor[0]);
            ymin = std::min(ymin, e.anchor[1]); ymax = std::max(ymax, e.anchor[1]);
        }
        // Winding number of face (i, j): signed crossings of the +x ray from
        // the face with the cycle's y-edges. Vanishes off the bounding box.
        LatticeChain planar_fill(2);
        for (std::int64_t j = ymin; j <= ymax; ++j)
            for (std::int64_t i = xmin; i <= xmax; ++i) {
                Int w = 0;
                for (const auto& [e, c] : remaining.terms())
                    if (e.has_axis(AxisY) && e.anchor[0] > i && e.anchor[1] == j) w += c;
                if (w != 0) planar_fill.add(Cell::square({i, j, zmin}, AxisX, AxisY), w);
            }
        if (boundary(planar_fill) == remaining) fill += planar_fill;
        else if (boundary(-planar_fill) == remaining) fill -= planar_fill;
        else throw std::logic_error("cone_filling: winding fill mismatch");
    }
    if (boundary(fill) != alpha) throw std::logic_error("cone_filling: boundary identity failed");
    return fill;
}

// Does a box-supported filling with multiplicity <= k exist, given one
// box-supported particular filling c0?
inline bool multiplicity_feasible(const LatticeChain& c0, const Box& box, const Int& k) {
    std::map<IVec3, int> cube_id;
    std::vector<IVec3> cubes;
    for (std::int64_t x = box.lo[0]; x < box.hi[0]; ++x)
        for (std::int64_t y = box.lo[1]; y < box.hi[1]; ++y)
            for (std::int64_t z = box.lo[2]; z < box.hi[2]; ++z) {
                cube_id[{x, y, z}] = int(cubes.size()) + 1;
                cubes.push_back({x, y, z});
            }
    auto node_of = [&](const IVec3& a) {
        auto it = cube_id.find(a);
        return it == cube_id.end() ? 0 : it->second;  // 0 = outside, pinned
    };

    // All faces of box cubes, each giving the pair of constraints
    //   -k <= c0(sq) + D_lower - D_upper <= k.
    std::map<Cell, bool> faces;
    for (const IVec3& a : cubes) {
        LatticeChain bc = boundary_cell(Cell::cube(a));
        for (const auto& [sq, sgn] : bc.terms()) faces[sq] = true;
    }
    for (const auto& [sq, c] : c0.terms())
        if (!faces.count(sq)) throw std::invalid_argument("multiplicity_feasible: c0 leaves the box");

    struct Edge { int from, to; Int w; };  // D_to - D_from <= w
    std::vector<Edge> edges;
    for (const auto& [sq, unused] : faces) {
        int d = square_normal(sq);
        IVec3 lower = sq.anchor;
        lower[d] -= 1;
        int nl = node_of(lower), nu = node_of(sq.anchor);
        Int base = c0.coeff(sq);
        edges.push_back({nu, nl, k - base});  // D_l - D_u <= k - base
        edges.push_back({nl, nu, k + base});  // D_u - D_l <= k + base
    }

    // Bellman-Ford with a virtual super-source (all distances start at 0);
    // feasible iff no negative cycle. Pinning D_0 = 0 afterwards is a shift.
    const int n = int(cubes.size()) + 1;
    std::vector<Int> dist(n, 0);
    for (int round = 0; round <= n; ++round) {
        bool changed = false;
        for (const Edge& e : edges)
            if (dist[e.from] + e.w < dist[e.to]) {
                dist[e.to] = dist[e.from] + e.w;
                changed = true;
            }
        if (!changed) return true;
    }
    return false;
}

// Exact minimum L-infinity multiplicity over fillings supported in `box`.
inline Int min_linf_filling(const LatticeChain& alpha, const Box& box) {
    LatticeChain c0 = cone_filling(alpha);
    Int lo = 0, hi = c0.linf_norm();
    if (hi == 0) return 0;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (multiplicity_feasible(c0, box, mid)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

}  // namespace exsys::testoracle
