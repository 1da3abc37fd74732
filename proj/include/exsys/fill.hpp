// Isoperimetric filling of lattice 1-cycles by 2-chains of bounded
// multiplicity. A closed word is reduced by repeatedly picking a closest
// letter/inverse pair, transposing the letter next to its inverse (each
// transposition sweeps one square, contributing +-1 to the filling), and
// eliminating the pair. The filling C satisfies dC = ch(word) exactly and
// |C|_inf <= |word|; for embedded loops |word| = |ch(word)|_1.
#pragma once

#include "exsys/decompose.hpp"
#include "exsys/lattice_loop.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace exsys {

struct FillMove {
    enum class Kind { CancelPair, Transpose, EliminatePair };
    Kind kind;
    std::size_t pos = 0;   // position in the internal (rotated) word
    Cell square{};         // Transpose only
    int coeff = 0;         // Transpose only, +1 or -1
};

struct FillingResult {
    LatticeChain chain{2};
    Int multiplicity;  // == chain.linf_norm()
    std::vector<FillMove> transcript;

    // The chain is exactly the sum of the transcript's transposition squares.
    LatticeChain replay() const {
        LatticeChain c(2);
        for (const FillMove& m : transcript)
            if (m.kind == FillMove::Kind::Transpose) c.add(m.square, m.coeff);
        return c;
    }
};

namespace detail {

// Removes adjacent inverse pairs, cyclically. The base vertex tracks the
// rotation forced by a wrap-around cancellation.
inline void cyclic_reduce(std::vector<Step>& w, IVec3& base, std::vector<FillMove>* transcript) {
    bool changed = true;
    while (changed && w.size() >= 2) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i + 1] == w[i].inverse()) {
                if (transcript)
                    transcript->push_back({FillMove::Kind::CancelPair, i, Cell{}, 0});
                w.erase(w.begin() + i, w.begin() + i + 2);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        if (w.size() >= 2 && w.front() == w.back().inverse()) {
            if (transcript)
                transcript->push_back({FillMove::Kind::CancelPair, w.size() - 1, Cell{}, 0});
            base = base + w.front().delta();
            w.erase(w.begin());
            w.pop_back();
            changed = true;
        }
    }
}

}  // namespace detail

// Lemma-3.16 style filling of a closed lattice word.
inline FillingResult fill_x1(const LatticeLoop& loop) {
    if (!loop.closed()) throw std::invalid_argument("fill_x1: open path");
    const LatticeChain target = ch(loop);
    const std::size_t initial_len = loop.word.size();

    std::vector<Step> w = loop.word;
    IVec3 base = loop.base;
    FillingResult res;

    while (true) {
        detail::cyclic_reduce(w, base, &res.transcript);
        const std::size_t n = w.size();
        if (n == 0) break;

        // Closest letter/inverse pair (cyclically): for each i the distance
        // to the next inverse of w[i]; minimal gap, ties to the smallest i.
        // Minimality forces the enclosed substring to be monotone in the
        // other two axes, so the swept squares are distinct.
        std::size_t best_i = 0, best_gap = n;
        for (std::size_t i = 0; i < n; ++i) {
            Step inv = w[i].inverse();
            for (std::size_t g = 0; g + 1 < n; ++g) {
                if (w[(i + g + 1) % n] == inv) {
                    if (g < best_gap) { best_gap = g; best_i = i; }
                    break;
                }
            }
        }
        if (best_gap >= n) throw std::logic_error("fill_x1: closed word without inverse pair");

        // Rotate so the pair sits at positions 0 and best_gap + 1.
        if (best_i != 0) {
            IVec3 v = base;
            for (std::size_t t = 0; t < best_i; ++t) v = v + w[t].delta();
            std::rotate(w.begin(), w.begin() + best_i, w.end());
            base = v;
        }

        std::vector<IVec3> vtx(w.size() + 1);
        vtx[0] = base;
        for (std::size_t t = 0; t < w.size(); ++t) vtx[t + 1] = vtx[t] + w[t].delta();

        for (std::size_t t = 0; t < best_gap; ++t) {
            Step A = w[t], B = w[t + 1];
            if (A.axis == B.axis) throw std::logic_error("fill_x1: pair not innermost");
            IVec3 corner = vtx[t];
            IVec3 anchor = corner;
            if (A.dir < 0) anchor[A.axis] -= 1;
            if (B.dir < 0) anchor[B.axis] -= 1;
            Cell sq = Cell::square(anchor, A.axis, B.axis);

            // delta = ch(path after swap) - ch(path before swap) on 4 edges.
            LatticeChain delta(1);
            auto addstep = [&](const IVec3& v, const Step& s, int sgn) {
                auto [e, es] = step_edge(v, s);
                delta.add(e, es * sgn);
            };
            addstep(corner, B, +1);
            addstep(corner + B.delta(), A, +1);
            addstep(corner, A, -1);
            addstep(corner + A.delta(), B, -1);

            LatticeChain bs = boundary_cell(sq);
            int eps;
            if (bs == -delta) eps = +1;
            else if (bs == delta) eps = -1;
            else throw std::logic_error("fill_x1: swept square boundary mismatch");

            res.chain.add(sq, eps);
            res.transcript.push_back({FillMove::Kind::Transpose, t, sq, eps});

            std::swap(w[t], w[t + 1]);
            vtx[t + 1] = corner + B.delta();
        }

        // The pair is now adjacent at (best_gap, best_gap + 1); eliminate.
        if (w[best_gap + 1] != w[best_gap].inverse())
            throw std::logic_error("fill_x1: pair not adjacent after transpositions");
        res.transcript.push_back({FillMove::Kind::EliminatePair, best_gap, Cell{}, 0});
        w.erase(w.begin() + best_gap, w.begin() + best_gap + 2);
    }

    if (boundary(res.chain) != target) throw std::logic_error("fill_x1: boundary identity failed");
    res.multiplicity = res.chain.linf_norm();
    if (res.multiplicity > Int(initial_len))
        throw std::logic_error("fill_x1: multiplicity exceeds word length bound");
    return res;
}

// Fills an arbitrary lattice 1-cycle: decompose into embedded loops, fill
// each, and sum. |C|_inf <= |alpha|_1 because the pieces' L1 norms add.
inline FillingResult fill_cycle(const LatticeChain& alpha) {
    if (alpha.dim() != 1) throw std::invalid_argument("fill_cycle: wants a 1-chain");
    if (!boundary(alpha).zero()) throw std::invalid_argument("fill_cycle: not a cycle");
    FillingResult total;
    LatticeGraph g;
    for (const auto& piece : decompose_cycle(g, alpha)) {
        FillingResult part = fill_x1(to_lattice_loop(piece));
        total.chain += part.chain;
        for (auto& m : part.transcript) total.transcript.push_back(m);
    }
    if (boundary(total.chain) != alpha) throw std::logic_error("fill_cycle: boundary identity failed");
    total.multiplicity = total.chain.linf_norm();
    if (total.multiplicity > alpha.l1_norm())
        throw std::logic_error("fill_cycle: multiplicity exceeds L1 bound");
    return total;
}

inline std::string serialize(const FillingResult& r) {
    std::ostringstream os;
    os << serialize(r.chain);
    os << "multiplicity " << r.multiplicity << "\n";
    os << "transcript " << r.transcript.size() << "\n";
    for (const FillMove& m : r.transcript) {
        switch (m.kind) {
            case FillMove::Kind::CancelPair: os << "cancel " << m.pos << "\n"; break;
            case FillMove::Kind::EliminatePair: os << "eliminate " << m.pos << "\n"; break;
            case FillMove::Kind::Transpose:
                os << "transpose " << m.pos << ' ' << m.square.anchor[0] << ' '
                   << m.square.anchor[1] << ' ' << m.square.anchor[2] << ' '
                   << cell_axes_string(m.square) << ' ' << m.coeff << "\n";
                break;
        }
    }
    return os.str();
}

}  // namespace exsys
