#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ovr/board.hpp"

using namespace ovr;

namespace {

Graph random_graph(int n, int one_in, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % one_in == 0) g.add_edge(u, v);
    return g;
}

Board random_board(int n, int r, int one_in, std::mt19937_64& rng) {
    Board b(r);
    for (int v = 0; v < n; ++v) {
        Move m;
        for (int u = 0; u < v; ++u)
            if (rng() % one_in == 0) m.neighbors.push_back(u);
        b.present(m);
        b.paint(static_cast<int>(rng() % r));
    }
    return b;
}

}  // namespace

TEST(Board, ValidatesMovesAndPainting) {
    Board b(2);
    EXPECT_THROW(b.paint(0), std::logic_error);
    EXPECT_EQ(b.present(Move{}), 0);
    EXPECT_TRUE(b.has_pending());
    EXPECT_THROW(b.present(Move{}), std::logic_error);
    EXPECT_THROW(b.paint(2), std::invalid_argument);
    b.paint(1);
    EXPECT_THROW(b.present(Move{{0, 0}}), std::invalid_argument);
    EXPECT_THROW(b.present(Move{{3}}), std::invalid_argument);
    EXPECT_EQ(b.present(Move{{0}}), 1);
    EXPECT_TRUE(b.graph().adjacent(0, 1));
    EXPECT_THROW(Board::from_parts(2, Graph(2), {-1, 0}), std::invalid_argument);
    EXPECT_NO_THROW(Board::from_parts(2, Graph(2), {0, -1}));
}

TEST(Restriction, IntegerForms) {
    Restriction d = Restriction::density(make_rational(3, 4));
    EXPECT_EQ(d.edge_profit, 4);
    EXPECT_EQ(d.vertex_cost, 3);
    EXPECT_EQ(d.bound, 0);
    Restriction g = Restriction::generalized(make_rational(2, 3), make_rational(-1, 2));
    EXPECT_EQ(g.edge_profit, 4);
    EXPECT_EQ(g.vertex_cost, 6);
    EXPECT_EQ(g.bound, 3);
    EXPECT_THROW(Restriction::density(Rational(0)), std::invalid_argument);
    EXPECT_THROW(Restriction::generalized(Rational(-1), Rational(0)), std::invalid_argument);
}

TEST(MinMu, MatchesSubsetEnumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 10;
        Graph g = random_graph(n, 2 + trial % 3, rng);
        Rational theta = make_rational(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 4));
        std::vector<int> forced;
        if (trial % 2)
            for (int v = 0; v < n; ++v)
                if (rng() % 4 == 0) forced.push_back(v);
        EXPECT_EQ(min_mu(g, theta, forced), oracle::min_mu(g, theta, forced));
    }
}

TEST(Legality, DensityAndGeneralizedMatchBruteForce) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 9;
        Graph g = random_graph(n, 2, rng);
        Rational d = make_rational(1 + static_cast<long>(rng() % 8), 1 + static_cast<long>(rng() % 5));
        EXPECT_EQ(legal_graph(g, Restriction::density(d)), oracle::max_density(g) <= d);
        Rational theta = make_rational(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 4));
        Rational beta = make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        EXPECT_EQ(legal_graph(g, Restriction::generalized(theta, beta)), oracle::min_mu(g, theta) >= beta)
            << "theta " << theta << " beta " << beta;
    }
}

TEST(Legality, IncrementalCheckAgreesWithWholeGraph) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Rational d = make_rational(2 + static_cast<long>(rng() % 5), 3);
        Restriction R = trial % 2 ? Restriction::density(d) : Restriction::generalized(make_rational(3, 4), Rational(0));
        Board b(2);
        for (int step = 0; step < 9; ++step) {
            Move m;
            for (int u = 0; u < b.size(); ++u)
                if (rng() % 2) m.neighbors.push_back(u);
            Graph after = b.graph();
            int v = after.add_vertex();
            for (int u : m.neighbors) after.add_edge(u, v);
            bool inc = legal(b, m, R);
            EXPECT_EQ(inc, legal_graph(after, R));
            if (inc) {
                b.present(m);
                b.paint(step % 2);
            }
        }
    }
}

TEST(MaxWeightClosure, SmallCases) {
    Graph tri = complete_graph(3);
    EXPECT_EQ(max_weight_closure(tri, 1, 1, {}), 0);     // 3 - 3
    EXPECT_EQ(max_weight_closure(tri, 2, 1, {}), 3);     // 6 - 3
    EXPECT_EQ(max_weight_closure(Graph(3), 5, 1, {1}), -1);
}

TEST(Embedding, AgreesWithPermutationSearch) {
    std::mt19937_64 rng(21);
    std::vector<Graph> patterns{complete_graph(3), path_graph(3), path_graph(4), cycle_graph(4),
                                Graph::from_edges(4, {{0, 1}, {2, 3}})};
    for (int trial = 0; trial < 250; ++trial) {
        int n = 3 + trial % 6;
        Graph host = random_graph(n, 2, rng);
        std::vector<char> allowed(n);
        for (auto& a : allowed) a = rng() % 4 != 0;
        const Graph& F = patterns[trial % patterns.size()];
        int anchor = trial % 3 == 0 ? -1 : static_cast<int>(rng() % n);
        if (anchor >= 0) allowed[anchor] = 1;
        auto e = find_embedding(F, host, allowed, anchor);
        ASSERT_EQ(e.has_value(), oracle::contains(F, host, allowed, anchor));
        if (e) {
            for (auto [a, b] : F.edges()) EXPECT_TRUE(host.adjacent((*e)[a], (*e)[b]));
            for (int x : *e) EXPECT_TRUE(allowed[x]);
        }
    }
}

TEST(Embedding, AnchoredDetectionMatchesFromScratch) {
    // Incremental detection (anchored at the newest vertex) against a full
    // search on the same board, one vertex at a time.
    std::mt19937_64 rng(31);
    Graph F = complete_graph(3);
    for (int trial = 0; trial < 60; ++trial) {
        Board b(2);
        bool seen = false;
        for (int v = 0; v < 12; ++v) {
            Move m;
            for (int u = 0; u < v; ++u)
                if (rng() % 2) m.neighbors.push_back(u);
            b.present(m);
            b.paint(static_cast<int>(rng() % 2));
            bool anchored = detect_mono(b, F, v).has_value();
            bool full = detect_mono(b, F).has_value();
            EXPECT_EQ(seen || anchored, full);
            seen = full;
        }
    }
}

TEST(OrderedCopies, CountMatchesSubsetEnumeration) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 8;
        Board b = random_board(n, 2, 2, rng);
        int h = 1 + trial % 4;
        OrderedKey k{0, h};
        for (int i = 0; i < h * (h - 1) / 2; ++i)
            if (rng() % 2) k.bits |= std::uint64_t{1} << i;
        int color = static_cast<int>(rng() % 2);
        int anchor = trial % 2 ? n - 1 : -1;
        std::size_t count = 0;
        for_each_ordered_copy(k, b.graph(), b.colors_by_vertex(), color, anchor, [&](const std::vector<int>& m) {
            for (int p = 1; p < h; ++p) EXPECT_GT(m[p - 1], m[p]);
            ++count;
            return true;
        });
        EXPECT_EQ(count, oracle::ordered_copies(k, b.graph(), b.colors_by_vertex(), color, anchor));
        EXPECT_EQ(has_ordered_copy(k, b.graph(), b.colors_by_vertex(), color, anchor), count > 0);
    }
}

TEST(Ramsey, CompleteGraphAtPigeonholeSizeForcesF) {
    // K_{r(v-1)+1} always holds a monochromatic F; one vertex less may not.
    EXPECT_TRUE(oracle::vertex_ramsey(complete_graph(5), complete_graph(3), 2));
    EXPECT_FALSE(oracle::vertex_ramsey(complete_graph(4), complete_graph(3), 2));
    EXPECT_TRUE(oracle::vertex_ramsey(complete_graph(3), complete_graph(2), 2));
}
