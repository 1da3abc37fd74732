// Sparse integer cellular chains over an ordered cell-key type, plus the
// boundary operator of the cubical lattice. Coefficients are arbitrary
// precision; a stored coefficient is never zero.
#pragma once

#include "exsys/cell.hpp"
#include "exsys/rational.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace exsys {

template <class Key>
class Chain {
public:
    Chain() = default;
    explicit Chain(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }
    const std::map<Key, Int>& terms() const { return coeffs_; }

    Int coeff(const Key& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add(const Key& k, Int c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(k, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Chain& operator+=(const Chain& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, c);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, -c);
        return *this;
    }
    Chain& operator*=(const Int& s) {
        if (s == 0) { coeffs_.clear(); return *this; }
        for (auto& [k, c] : coeffs_) c *= s;
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { a += b; return a; }
    friend Chain operator-(Chain a, const Chain& b) { a -= b; return a; }
    friend Chain operator*(const Int& s, Chain a) { a *= s; return a; }
    Chain operator-() const {
        Chain r(dim_);
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
        return r;
    }
    bool operator==(const Chain& o) const { return dim_ == o.dim_ && coeffs_ == o.coeffs_; }

    Int l1_norm() const {
        Int s = 0;
        for (const auto& [k, c] : coeffs_) s += abs_int(c);
        return s;
    }
    Int linf_norm() const {
        Int m = 0;
        for (const auto& [k, c] : coeffs_) {
            Int a = abs_int(c);
            if (a > m) m = a;
        }
        return m;
    }

private:
    int dim_ = 0;
    std::map<Key, Int> coeffs_;
};

using LatticeChain = Chain<Cell>;

struct ChainNorms {
    Int l1;
    Int linf;
};

template <class Key>
ChainNorms norms(const Chain<Key>& c) {
    return ChainNorms{c.l1_norm(), c.linf_norm()};
}

// Boundary of a single lattice cell. Convention: edges point along
// increasing coordinate; squares are oriented by the cyclic frame of
// square_frame(); cubes carry outward-normal signs against those square
// orientations. This is consistent (dd = 0), which the tests check
// exhaustively on small grids.
inline LatticeChain boundary_cell(const Cell& c) {
    if (c.dim == 0) throw std::invalid_argument("no boundary below dimension 0");
    LatticeChain out(c.dim - 1);
    if (c.dim == 1) {
        int n = 0;
        auto ax = cell_axes(c, n);
        out.add(Cell::vertex(c.anchor + unit_ivec(ax[0])), 1);
        out.add(Cell::vertex(c.anchor), -1);
    } else if (c.dim == 2) {
        auto [a, b] = square_frame(c);
        // Counterclockwise in the (a, b) frame.
        out.add(Cell::edge(c.anchor, a), 1);
        out.add(Cell::edge(c.anchor + unit_ivec(a), b), 1);
        out.add(Cell::edge(c.anchor + unit_ivec(b), a), -1);
        out.add(Cell::edge(c.anchor, b), -1);
    } else {
        for (int d = 0; d < 3; ++d) {
            Cell lo = Cell::square(c.anchor, (d + 1) % 3, (d + 2) % 3);
            Cell hi = lo;
            hi.anchor = c.anchor + unit_ivec(d);
            out.add(hi, 1);
            out.add(lo, -1);
        }
    }
    return out;
}

inline LatticeChain boundary(const LatticeChain& c) {
    if (c.dim() == 0) throw std::invalid_argument("no boundary below dimension 0");
    LatticeChain out(c.dim() - 1);
    for (const auto& [cell, coeff] : c.terms()) {
        LatticeChain b = boundary_cell(cell);
        b *= coeff;
        out += b;
    }
    return out;
}

// Line format: "dim ax ay az axes coeff", lexicographic key order.
inline std::string serialize(const LatticeChain& c) {
    std::ostringstream os;
    os << "chain dim " << c.dim() << "\n";
    for (const auto& [cell, coeff] : c.terms()) {
        os << int(cell.dim) << ' ' << cell.anchor[0] << ' ' << cell.anchor[1] << ' '
           << cell.anchor[2] << ' ' << cell_axes_string(cell) << ' ' << coeff << "\n";
    }
    return os.str();
}

inline LatticeChain parse_lattice_chain(std::istream& in) {
    std::string tag, dimword;
    int dim = 0;
    in >> tag >> dimword >> dim;
    if (tag != "chain" || dimword != "dim") throw std::runtime_error("bad chain header");
    LatticeChain c(dim);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) break;
        std::istringstream ls(line);
        int d;
        std::int64_t x, y, z;
        std::string axes;
        Int coeff;
        if (!(ls >> d >> x >> y >> z >> axes >> coeff)) throw std::runtime_error("bad chain line: " + line);
        Cell cell;
        cell.dim = std::int8_t(d);
        cell.anchor = {x, y, z};
        cell.axes = 0;
        if (axes != "-")
            for (char ch : axes) cell.axes |= std::uint8_t(1u << (ch - 'x'));
        if (!cell_well_formed(cell) || cell.dim != dim) throw std::runtime_error("bad cell in chain: " + line);
        c.add(cell, coeff);
    }
    return c;
}

}  // namespace exsys
