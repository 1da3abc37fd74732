// Decomposition of a 1-cycle into embedded closed walks with exact L1
// additivity: the pieces sum to the input chain and their L1 norms add with
// no cancellation. The walk extends along edges of matching residual sign
// until a vertex repeats, extracts that loop, and continues.
#pragma once

#include "exsys/chain.hpp"
#include "exsys/lattice_loop.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace exsys {

// One extracted embedded loop: signed edge sequence plus the vertex cycle.
// vertices has size edges.size() + 1 with front() == back().
template <class VKey, class EKey>
struct GraphLoop {
    std::vector<VKey> vertices;
    std::vector<std::pair<EKey, int>> edges;  // (edge key, +1 forward / -1 backward)

    Chain<EKey> chain() const {
        Chain<EKey> c(1);
        for (const auto& [e, s] : edges) c.add(e, s);
        return c;
    }
};

// Normalizes basepoint for reproducible output: rotate so the smallest
// vertex key comes first.
template <class VKey, class EKey>
void normalize_loop(GraphLoop<VKey, EKey>& loop) {
    if (loop.edges.empty()) return;
    std::size_t n = loop.edges.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (loop.vertices[i] < loop.vertices[best]) best = i;
    if (best == 0) return;
    GraphLoop<VKey, EKey> out;
    out.vertices.reserve(n + 1);
    out.edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (best + i) % n;
        out.vertices.push_back(loop.vertices[j]);
        out.edges.push_back(loop.edges[j]);
    }
    out.vertices.push_back(out.vertices.front());
    loop = std::move(out);
}

// Graph adapter concept: G provides
//   using VertexKey = ...; (ordered)
//   std::pair<VertexKey, VertexKey> endpoints(const EKey&) const;  // (tail, head)
template <class G, class EKey>
std::vector<GraphLoop<typename G::VertexKey, EKey>> decompose_cycle(const G& graph,
                                                                    const Chain<EKey>& a) {
    using VKey = typename G::VertexKey;
    using Loop = GraphLoop<VKey, EKey>;

    // Residual coefficients; traversals consume one unit of matching sign.
    std::map<EKey, Int> residual;
    for (const auto& [e, c] : a.terms()) residual.emplace(e, c);

    // Vertex -> incident edges with a usable direction, ordered by edge key
    // so continuation choices are deterministic.
    std::map<VKey, std::vector<EKey>> incident;
    for (const auto& [e, c] : a.terms()) {
        auto [t, h] = graph.endpoints(e);
        incident[t].push_back(e);
        if (!(h == t)) incident[h].push_back(e);
    }

    auto usable_from = [&](const VKey& v, const EKey& e) -> int {
        auto it = residual.find(e);
        if (it == residual.end() || it->second == 0) return 0;
        auto [t, h] = graph.endpoints(e);
        if (v == t && it->second > 0) return +1;   // traverse forward
        if (v == h && it->second < 0) return -1;   // traverse against orientation
        return 0;
    };

    std::vector<Loop> out;
    std::vector<VKey> stack_v;
    std::vector<std::pair<EKey, int>> stack_e;  // edge taken leaving stack_v[i]
    std::map<VKey, std::size_t> on_stack;

    auto verify_cycle_or_throw = [&]() {
        // Stuck mid-walk means the input had nonzero boundary.
        throw std::invalid_argument("decompose_cycle: not a cycle");
    };

    auto next_seed = [&]() -> const EKey* {
        for (const auto& [e, c] : residual)
            if (c != 0) return &e;
        return nullptr;
    };

    while (true) {
        if (stack_v.empty()) {
            const EKey* seed = next_seed();
            if (!seed) break;
            auto [t, h] = graph.endpoints(*seed);
            VKey start = residual[*seed] > 0 ? t : h;
            stack_v.push_back(start);
            on_stack[start] = 0;
        }
        VKey cur = stack_v.back();
        // Deterministic continuation: smallest usable edge key.
        const EKey* chosen = nullptr;
        int dir = 0;
        for (const EKey& e : incident[cur]) {
            int d = usable_from(cur, e);
            if (d != 0) {
                if (!chosen || e < *chosen) { chosen = &e; dir = d; }
            }
        }
        // A seed vertex always has its seed edge usable, and mid-walk a
        // cycle always has an exit (the residual's boundary is supported on
        // {start, cur}). Getting stuck therefore means nonzero boundary.
        if (!chosen) verify_cycle_or_throw();
        EKey e = *chosen;
        auto [t, h] = graph.endpoints(e);
        VKey nxt = (dir > 0) ? h : t;
        residual[e] -= dir;
        stack_e.emplace_back(e, dir);

        auto hit = on_stack.find(nxt);
        if (hit != on_stack.end()) {
            // Extract the loop from the first occurrence of nxt to the top.
            std::size_t i = hit->second;
            Loop loop;
            loop.vertices.assign(stack_v.begin() + i, stack_v.end());
            loop.vertices.push_back(nxt);
            loop.edges.assign(stack_e.begin() + i, stack_e.end());
            normalize_loop(loop);
            out.push_back(std::move(loop));
            for (std::size_t j = i; j < stack_v.size(); ++j)
                if (j > i || stack_v[j] != nxt) on_stack.erase(stack_v[j]);
            on_stack[nxt] = i;
            stack_v.resize(i + 1);
            stack_v[i] = nxt;
            stack_e.resize(i);
            if (i == 0) {
                // Loop closed at the walk origin; restart cleanly.
                on_stack.clear();
                stack_v.clear();
            }
        } else {
            stack_v.push_back(nxt);
            on_stack[nxt] = stack_v.size() - 1;
        }
    }
    return out;
}

// Lattice 1-skeleton adapter.
struct LatticeGraph {
    using VertexKey = IVec3;
    std::pair<IVec3, IVec3> endpoints(const Cell& e) const {
        int n = 0;
        auto ax = cell_axes(e, n);
        return {e.anchor, e.anchor + unit_ivec(ax[0])};
    }
};

// Converts an extracted lattice loop back to a word-based LatticeLoop.
inline LatticeLoop to_lattice_loop(const GraphLoop<IVec3, Cell>& g) {
    LatticeLoop loop;
    loop.base = g.vertices.front();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& [e, s] = g.edges[i];
        int n = 0;
        auto ax = cell_axes(e, n);
        loop.word.push_back(Step{std::int8_t(ax[0]), std::int8_t(s)});
    }
    return loop;
}

}  // namespace exsys
