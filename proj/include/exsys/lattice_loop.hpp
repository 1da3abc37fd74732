// Closed edge paths on the lattice 1-skeleton, stored as words in the six
// letters x, y, z and their inverses, with a base vertex.
#pragma once

#include "exsys/chain.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace exsys {

// Step encoding: axis in {0,1,2}, dir in {+1,-1}.
struct Step {
    std::int8_t axis;
    std::int8_t dir;

    bool operator==(const Step&) const = default;
    Step inverse() const { return Step{axis, std::int8_t(-dir)}; }
    IVec3 delta() const {
        IVec3 v{0, 0, 0};
        v[axis] = dir;
        return v;
    }
    char letter() const {
        char base = axis_letter(axis);
        return dir > 0 ? char(base - 'a' + 'A') : base;  // X positive, x negative? see note below
    }
};

// Serialization convention (external interface): uppercase = positive
// direction, lowercase = negative. So "X" is +x and "x" is -x.
inline Step step_from_letter(char c) {
    bool upper = (c >= 'A' && c <= 'Z');
    char low = upper ? char(c - 'A' + 'a') : c;
    if (low < 'x' || low > 'z') throw std::invalid_argument(std::string("bad word letter: ") + c);
    return Step{std::int8_t(low - 'x'), std::int8_t(upper ? 1 : -1)};
}

struct LatticeLoop {
    IVec3 base{0, 0, 0};
    std::vector<Step> word;

    IVec3 net_displacement() const {
        IVec3 d{0, 0, 0};
        for (const Step& s : word) d = d + s.delta();
        return d;
    }
    bool closed() const { return net_displacement() == IVec3{0, 0, 0}; }

    // Vertices visited: word.size() + 1 entries, first == base, last == base when closed.
    std::vector<IVec3> vertices() const {
        std::vector<IVec3> vs;
        vs.reserve(word.size() + 1);
        IVec3 v = base;
        vs.push_back(v);
        for (const Step& s : word) {
            v = v + s.delta();
            vs.push_back(v);
        }
        return vs;
    }

    // True when no vertex repeats (except the final closure).
    bool embedded() const {
        auto vs = vertices();
        if (!word.empty()) vs.pop_back();
        std::vector<IVec3> sorted = vs;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
};

// The signed edge traversed from vertex v by step s: cell plus coefficient.
inline std::pair<Cell, int> step_edge(const IVec3& v, const Step& s) {
    if (s.dir > 0) return {Cell::edge(v, s.axis), 1};
    return {Cell::edge(v + s.delta(), s.axis), -1};
}

// ch of a lattice path: net signed traversals per edge. For closed loops
// this is the cellular cycle associated to the curve.
inline LatticeChain ch(const LatticeLoop& loop) {
    LatticeChain c(1);
    IVec3 v = loop.base;
    for (const Step& s : loop.word) {
        auto [e, sgn] = step_edge(v, s);
        c.add(e, sgn);
        v = v + s.delta();
    }
    return c;
}

inline std::string serialize(const LatticeLoop& loop) {
    std::ostringstream os;
    os << loop.base[0] << ' ' << loop.base[1] << ' ' << loop.base[2] << " : ";
    for (const Step& s : loop.word) os << s.letter();
    return os.str();
}

inline LatticeLoop parse_lattice_loop(const std::string& text) {
    std::istringstream is(text);
    LatticeLoop loop;
    std::string colon, word;
    if (!(is >> loop.base[0] >> loop.base[1] >> loop.base[2] >> colon))
        throw std::runtime_error("bad loop line: " + text);
    if (colon != ":") throw std::runtime_error("bad loop separator in: " + text);
    if (is >> word)
        for (char c : word) loop.word.push_back(step_from_letter(c));
    return loop;
}

}  // namespace exsys
