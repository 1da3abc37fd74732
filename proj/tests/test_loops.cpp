#include "exsys/decompose.hpp"
#include "exsys/lattice_loop.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace exsys;
using testutil::Rng;

namespace {

// Independent oracle for the winding coefficient of one edge: simulate the
// quotient-circle degree directly from the traversal sequence.
int degree_on_quotient_circle(const LatticeLoop& loop, const Cell& edge) {
    // On the quotient circle Y^1/(Y^1 - edge) only traversals of `edge`
    // move the point, each contributing a full signed turn.
    int deg = 0;
    IVec3 v = loop.base;
    for (const Step& s : loop.word) {
        auto [e, sgn] = step_edge(v, s);
        if (e == edge) deg += sgn;
        v = v + s.delta();
    }
    return deg;
}

}  // namespace

TEST(Ch, UnitSquareWordEqualsSquareBoundary) {
    LatticeLoop loop = parse_lattice_loop("0 0 0 : XYxy");
    ASSERT_TRUE(loop.closed());
    LatticeChain sq(2);
    sq.add(Cell::square({0, 0, 0}, AxisX, AxisY), 1);
    EXPECT_EQ(ch(loop), boundary(sq));
}

TEST(Ch, BackAndForthCancels) {
    LatticeLoop loop = parse_lattice_loop("0 0 0 : Xx");
    EXPECT_TRUE(ch(loop).zero());
}

TEST(Ch, ClosedLoopIsCycle) {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        LatticeLoop loop = testutil::random_closed_walk(rng, int(rng.uniform(1, 10)));
        ASSERT_TRUE(loop.closed());
        EXPECT_TRUE(boundary(ch(loop)).zero());
    }
}

TEST(Ch, ConcatenationAdditivity) {
    // Lemma: ch(g) = ch(g1) + ch(g2) over random splits of random walks.
    Rng rng(34);
    for (int i = 0; i < 1000; ++i) {
        LatticeLoop loop = testutil::random_closed_walk(rng, int(rng.uniform(1, 12)));
        std::size_t cut = std::size_t(rng.uniform(0, std::int64_t(loop.word.size())));
        LatticeLoop part1{loop.base, {loop.word.begin(), loop.word.begin() + cut}};
        IVec3 mid = part1.net_displacement() + loop.base;
        LatticeLoop part2{mid, {loop.word.begin() + cut, loop.word.end()}};
        EXPECT_EQ(ch(loop), ch(part1) + ch(part2));
    }
}

TEST(Ch, ReversalNegates) {
    Rng rng(56);
    for (int i = 0; i < 200; ++i) {
        LatticeLoop loop = testutil::random_closed_walk(rng, int(rng.uniform(1, 8)));
        LatticeLoop rev;
        rev.base = loop.base;
        for (auto it = loop.word.rbegin(); it != loop.word.rend(); ++it)
            rev.word.push_back(it->inverse());
        EXPECT_EQ(ch(rev), -ch(loop));
    }
}

TEST(Winding, QuotientCircleCrossCheck) {
    Rng rng(78);
    for (int i = 0; i < 200; ++i) {
        LatticeLoop loop = testutil::random_closed_walk(rng, int(rng.uniform(1, 8)));
        LatticeChain c = ch(loop);
        // Forward-then-backward traversal cancels; all coefficients agree
        // with the explicit degree computation.
        for (const auto& [cell, coeff] : c.terms())
            EXPECT_EQ(coeff, degree_on_quotient_circle(loop, cell));
        Cell untouched = Cell::edge({50, 50, 50}, AxisX);
        EXPECT_EQ(c.coeff(untouched), 0);
        EXPECT_EQ(degree_on_quotient_circle(loop, untouched), 0);
    }
}

TEST(Decompose, SingleEmbeddedLoop) {
    Rng rng(91);
    LatticeLoop loop = testutil::random_embedded_loop(rng, 3, 12);
    LatticeChain a = ch(loop);
    LatticeGraph g;
    auto pieces = decompose_cycle(g, a);
    ASSERT_EQ(pieces.size(), 1u);
    EXPECT_EQ(pieces[0].chain(), a);
    EXPECT_EQ(pieces[0].chain().l1_norm(), a.l1_norm());
}

TEST(Decompose, TwoDisjointSquares) {
    LatticeLoop l1 = parse_lattice_loop("0 0 0 : XYxy");
    LatticeLoop l2 = parse_lattice_loop("3 3 0 : XYxy");
    LatticeChain a = ch(l1) + ch(l2);
    LatticeGraph g;
    auto pieces = decompose_cycle(g, a);
    ASSERT_EQ(pieces.size(), 2u);
    Int total = 0;
    LatticeChain sum(1);
    for (const auto& p : pieces) {
        sum += p.chain();
        total += p.chain().l1_norm();
    }
    EXPECT_EQ(sum, a);
    EXPECT_EQ(total, 8);
}

TEST(Decompose, FigureEight) {
    // Two squares sharing one vertex, traversed as one closed walk.
    LatticeLoop fig = parse_lattice_loop("0 0 0 : XYxyxyXY");
    ASSERT_TRUE(fig.closed());
    LatticeChain a = ch(fig);
    LatticeGraph g;
    auto pieces = decompose_cycle(g, a);
    ASSERT_EQ(pieces.size(), 2u);
    LatticeChain sum(1);
    Int l1 = 0;
    for (const auto& p : pieces) {
        sum += p.chain();
        l1 += p.chain().l1_norm();
        // Embedded: no repeated vertices except closure.
        std::set<IVec3> seen(p.vertices.begin(), p.vertices.end() - 1);
        EXPECT_EQ(seen.size(), p.vertices.size() - 1);
    }
    EXPECT_EQ(sum, a);
    EXPECT_EQ(l1, a.l1_norm());
}

TEST(Decompose, RandomCyclesL1Additivity) {
    Rng rng(123);
    LatticeGraph g;
    for (int i = 0; i < 1000; ++i) {
        LatticeLoop w1 = testutil::random_closed_walk(rng, int(rng.uniform(1, 8)));
        LatticeLoop w2 = testutil::random_closed_walk(rng, int(rng.uniform(1, 8)));
        LatticeChain a = ch(w1) + ch(w2);
        if (a.zero()) continue;
        ASSERT_TRUE(boundary(a).zero());
        auto pieces = decompose_cycle(g, a);
        LatticeChain sum(1);
        Int l1 = 0;
        for (const auto& p : pieces) {
            sum += p.chain();
            l1 += p.chain().l1_norm();
            std::set<IVec3> seen(p.vertices.begin(), p.vertices.end() - 1);
            EXPECT_EQ(seen.size(), p.vertices.size() - 1);
        }
        EXPECT_EQ(sum, a);
        EXPECT_EQ(l1, a.l1_norm());
    }
}

TEST(Decompose, RejectsNonCycle) {
    LatticeChain a(1);
    a.add(Cell::edge({0, 0, 0}, AxisX), 1);
    LatticeGraph g;
    EXPECT_THROW(decompose_cycle(g, a), std::invalid_argument);
}

TEST(LoopSerialize, RoundTrip) {
    LatticeLoop loop = parse_lattice_loop("-1 2 0 : XXYZzzyxx");
    std::string s = serialize(loop);
    LatticeLoop back = parse_lattice_loop(s);
    EXPECT_EQ(back.base, loop.base);
    EXPECT_EQ(back.word.size(), loop.word.size());
    EXPECT_EQ(serialize(back), s);
}
