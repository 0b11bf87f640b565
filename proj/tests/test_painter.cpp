#include <gtest/gtest.h>

#include <sstream>

#include "game_helpers.hpp"
#include "ovr/big_lambda.hpp"
#include "ovr/density.hpp"
#include "ovr/painter.hpp"

using namespace ovr;

namespace {

struct Derived {
    Graph F;
    Rational theta;
    PaintStrategy st;
};

Derived derive(const Graph& F) {
    Rational theta = online_vertex_ramsey_density(F, 2).theta_star;
    return {F, theta, derive_paint_strategy(F, 2, theta)};
}

}  // namespace

TEST(PriorityList, SortedByLambdaThenFlag) {
    Derived d = derive(complete_graph(3));
    const auto& e = d.st.list.entries();
    ASSERT_EQ(e.size(), 22u);  // 11 classes, 2 colors
    for (std::size_t i = 1; i < e.size(); ++i) {
        ASSERT_LE(e[i - 1].lambda, e[i].lambda);
        if (e[i - 1].lambda == e[i].lambda) EXPECT_GE(e[i - 1].flagged, e[i].flagged);
    }
    EXPECT_EQ(d.st.value, 0);
}

TEST(PriorityList, TextRoundTrip) {
    for (const Graph& F : {complete_graph(2), complete_graph(3), path_graph(4)}) {
        Derived d = derive(F);
        std::istringstream in(d.st.list.to_text());
        PriorityList back = PriorityList::from_text(in);
        ASSERT_EQ(back.colors(), 2);
        ASSERT_EQ(back.entries().size(), d.st.list.entries().size());
        for (std::size_t i = 0; i < back.entries().size(); ++i) {
            EXPECT_EQ(back.entries()[i].key, d.st.list.entries()[i].key);
            EXPECT_EQ(back.entries()[i].color, d.st.list.entries()[i].color);
            EXPECT_EQ(back.entries()[i].lambda, d.st.list.entries()[i].lambda);
            EXPECT_EQ(back.entries()[i].flagged, d.st.list.entries()[i].flagged);
        }
        EXPECT_EQ(back.to_text(), d.st.list.to_text());
    }
}

TEST(PriorityList, RejectsMalformedText) {
    for (const char* bad : {"", "1 1 lambda=0 flag=0\n", "1 x lambda=0 flag=0 graph=<1;>\n",
                            "1 1 lambda=0 flag=2 graph=<1;>\n", "1 1 lam=0 flag=0 graph=<1;>\n",
                            "1 0 lambda=0 flag=0 graph=<1;>\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(PriorityList::from_text(in), std::exception) << bad;
    }
}

TEST(Paint, SurvivesRandomLegalBuildersBelowThreshold) {
    for (const Graph& F : {complete_graph(2), complete_graph(3), path_graph(3)}) {
        Derived d = derive(F);
        Restriction R = Restriction::density(Rational(1) / d.theta - make_rational(1, 100));
        AbstractPainter painter = paint_painter(d.st.list);
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            auto rec = testing_games::random_legal_game(F, 2, R, painter, 30, seed);
            ASSERT_FALSE(rec.builder_won) << write_graph(F) << " seed " << seed;
        }
    }
}

TEST(Paint, WitnessInvariantOnSampledBoards) {
    Derived d = derive(complete_graph(3));
    SubgraphFamily fam = SubgraphFamily::enumerate(d.F);
    CwResult run = cw_full(fam, 2, d.theta, d.st.alpha, true);
    WitnessConstants wc = compute_witness_constants(run.state);
    Restriction R = Restriction::density(Rational(1) / d.theta - make_rational(1, 100));
    AbstractPainter painter = paint_painter(d.st.list);
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        auto rec = testing_games::random_legal_game(d.F, 2, R, painter, 20, seed);
        WitnessReport rep = check_witness_invariant(rec.board, d.st.list, d.theta, wc.vmax);
        EXPECT_TRUE(rep.ok || rep.negative_subgraph) << rep.detail;
        EXPECT_GT(rep.copies_checked, 0u);
    }
}

TEST(Paint, DecisionPicksLargestDanger) {
    Derived d = derive(complete_graph(3));
    // Two adjacent vertices of color 1; a vertex joining both would close a
    // triangle in color 1, so color 2 is forced.
    Board b(2);
    b.present(Move{});
    b.paint(0);
    b.present(Move{{0}});
    b.paint(0);
    b.present(Move{{0, 1}});
    PaintDecision dec = paint_decide(b, d.st.list);
    EXPECT_EQ(dec.color, 1);
    EXPECT_TRUE(dec.d[0].is_neg_infinity() || dec.d[0] < dec.d[1]);
}

TEST(Greedy, AvoidsClosingACopy) {
    std::vector<Graph> H{complete_graph(2), complete_graph(2)};
    Board b(2);
    b.present(Move{});
    b.paint(1);
    b.present(Move{{0}});
    EXPECT_EQ(greedy_decide(b, H), 0);  // color 2 would complete an edge
    b.paint(0);
    b.present(Move{{0, 1}});
    EXPECT_EQ(greedy_decide(b, H), 0);  // both lose: fallback
}

TEST(Witness, ConstantsFollowTheFormula) {
    for (const Graph& F : {complete_graph(2), complete_graph(3), path_graph(3)}) {
        Derived d = derive(F);
        SubgraphFamily fam = SubgraphFamily::enumerate(F);
        CwResult run = cw_full(fam, 2, d.theta, d.st.alpha, true);
        WitnessConstants wc = compute_witness_constants(run.state);
        ASSERT_GT(wc.epsilon, 0);
        Rational ratio = Rational(F.vertex_count()) / wc.epsilon;
        mpz_class k = (ratio.get_num() + ratio.get_den() - 1) / ratio.get_den();
        mpz_class expected = k + (k + 1) * (2 * fam.size() + 1) * (F.vertex_count() + 1) + 2;
        EXPECT_EQ(wc.exponent, expected);
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), mpz_class(2).get_mpz_t(), wc.exponent.get_ui());
        EXPECT_EQ(wc.vmax, power * F.vertex_count() + 1);
    }
}

TEST(Witness, FlagsNegativeBoardsAndInfiniteClasses) {
    Derived d = derive(complete_graph(3));
    mpz_class big = 1000000;
    // K4 painted with two colors: mu_theta(K4) = 4 - 6 * 3/4 < 0.
    Board k4 = Board::from_parts(2, complete_graph(4), {0, 0, 1, 1});
    EXPECT_TRUE(check_witness_invariant(k4, d.st.list, d.theta, big).negative_subgraph);
    // A monochromatic triangle in a color whose triangle class is -inf.
    int bad_color = -1;
    for (const auto& e : d.st.list.entries())
        if (e.key.h == 3 && e.key.edge_count() == 3 && e.lambda.is_neg_infinity()) bad_color = e.color;
    ASSERT_GE(bad_color, 0);
    Board tri = Board::from_parts(2, complete_graph(3), {bad_color, bad_color, bad_color});
    WitnessReport rep = check_witness_invariant(tri, d.st.list, d.theta, big);
    EXPECT_FALSE(rep.ok);
}
