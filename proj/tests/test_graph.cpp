#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "ovr/graph.hpp"
#include "ovr/subgraph_family.hpp"

using namespace ovr;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Ordered classes of all subgraphs of F, counted by listing every vertex
// subset, edge subset and ordering.
std::size_t brute_family_size(const Graph& F) {
    std::set<std::pair<int, std::uint64_t>> seen;
    int n = F.vertex_count();
    for (std::uint32_t vs = 1; vs < (1u << n); ++vs) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (vs >> v & 1) verts.push_back(v);
        std::vector<std::pair<int, int>> inside;
        for (auto [a, b] : F.edges())
            if ((vs >> a & 1) && (vs >> b & 1)) inside.emplace_back(a, b);
        for (std::uint32_t es = 0; es < (1u << inside.size()); ++es) {
            std::vector<int> order = verts;
            do {
                std::uint64_t bits = 0;
                for (std::size_t i = 0; i < inside.size(); ++i) {
                    if (!(es >> i & 1)) continue;
                    int pa = static_cast<int>(std::find(order.begin(), order.end(), inside[i].first) - order.begin());
                    int pb = static_cast<int>(std::find(order.begin(), order.end(), inside[i].second) - order.begin());
                    bits |= std::uint64_t{1} << pair_index(pa, pb);
                }
                seen.emplace(static_cast<int>(verts.size()), bits);
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }
    return seen.size();
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), GraphFormatError);
    EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), GraphFormatError);
    EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), GraphFormatError);
    Graph g = Graph::from_edges(3, {{0, 1}});
    EXPECT_FALSE(g.add_edge(1, 0));
    EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, StandardFamilies) {
    EXPECT_EQ(complete_graph(5).edge_count(), 10);
    EXPECT_EQ(path_graph(4).edge_count(), 3);
    EXPECT_EQ(cycle_graph(5).edge_count(), 5);
    EXPECT_TRUE(path_graph(6).is_forest());
    EXPECT_FALSE(cycle_graph(4).is_forest());
    EXPECT_TRUE(cycle_graph(4).is_connected());
    EXPECT_FALSE(Graph(2).is_connected());
}

TEST(EdgeList, ParsesCommentsAndRejectsMalformedInput) {
    std::istringstream ok("# tri\n3 3\n0 1\n# mid\n0 2\n1 2\n");
    Graph g = parse_graph(ok);
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 3);
    for (const char* bad : {"", "3\n", "3 2\n0 1\n", "2 1\n0 5\n", "2 1\n1 1\n", "2 1\n0 x\n", "-1 0\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(parse_graph(in), GraphFormatError) << "input: " << bad;
    }
    EXPECT_THROW(read_graph_file("/nonexistent/graph.el"), GraphFormatError);
}

TEST(EdgeList, WriteParseRoundTripOnRandomGraphs) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(1 + trial % 12, 0.3, rng);
        std::istringstream in(write_graph(g));
        Graph h = parse_graph(in);
        ASSERT_EQ(h.vertex_count(), g.vertex_count());
        ASSERT_EQ(h.edges(), g.edges());
    }
}

TEST(OrderedKey, CanonicalKeyMatchesPositions) {
    // Youngest vertex 2 adjacent to the oldest vertex 0.
    OrderedGraph og{Graph::from_edges(3, {{0, 2}}), {2, 1, 0}};
    OrderedKey k = canonical_key(og);
    EXPECT_EQ(k.h, 3);
    EXPECT_TRUE(k.has_edge(0, 2));
    EXPECT_FALSE(k.has_edge(0, 1));
    EXPECT_EQ(k.edge_count(), 1);
    EXPECT_EQ(k.degree(1), 0);
    EXPECT_EQ(canonical_key(key_to_ordered_graph(k)), k);
}

TEST(OrderedKey, TextRoundTripAndDeletions) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        int h = 1 + trial % 6;
        OrderedKey k{0, h};
        for (int b = 0; b < h * (h - 1) / 2; ++b)
            if (rng() & 1) k.bits |= std::uint64_t{1} << b;
        EXPECT_EQ(key_from_text(key_to_text(k)), k);
        if (h >= 2) {
            OrderedKey p = parent_key(k);
            EXPECT_EQ(p.h, h - 1);
            EXPECT_EQ(p, restrict_key(k, ((1u << h) - 1) & ~1u));
        }
        std::vector<int> perm(h);
        for (int i = 0; i < h; ++i) perm[i] = h - 1 - i;
        EXPECT_EQ(permute_key(permute_key(k, perm), perm), k);
        EXPECT_EQ(permute_key(k, perm).edge_count(), k.edge_count());
    }
    EXPECT_THROW(key_from_text("<2;0-5>"), std::exception);
}

TEST(SubgraphFamily, SizesMatchBruteForceListing) {
    EXPECT_EQ(SubgraphFamily::enumerate(complete_graph(2)).size(), 3);
    EXPECT_EQ(SubgraphFamily::enumerate(complete_graph(3)).size(), 11);
    for (const Graph& F : {path_graph(3), path_graph(4), cycle_graph(4), complete_graph(4)})
        EXPECT_EQ(static_cast<std::size_t>(SubgraphFamily::enumerate(F).size()), brute_family_size(F));
}

TEST(SubgraphFamily, TreeStructureIsConsistent) {
    SubgraphFamily fam = SubgraphFamily::enumerate(cycle_graph(4));
    EXPECT_EQ(fam.node(fam.root()).key.h, 1);
    for (int id = 0; id < fam.size(); ++id) {
        const auto& node = fam.node(id);
        EXPECT_EQ(fam.find(node.key), id);
        if (id == fam.root()) continue;
        ASSERT_GE(node.parent, 0);
        EXPECT_EQ(fam.node(node.parent).key, parent_key(node.key));
        EXPECT_EQ(node.ancestors.front(), id);
        EXPECT_EQ(static_cast<int>(node.ancestors.size()), node.key.h);
    }
    for (int id : fam.full_nodes()) EXPECT_EQ(fam.node(id).key.edge_count(), 4);
    EXPECT_EQ(fam.full_nodes().size(), 3u);  // orderings of C4 up to ordered isomorphism
}
