#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ovr {

// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Validates: endpoints in range, no loops, no duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    int add_vertex();
    // Returns false if the edge already existed.
    bool add_edge(int u, int v);

    // Subgraph induced on `vertices` (in the given order, renumbered 0..k-1).
    Graph induced(const std::vector<int>& vertices) const;
    bool is_forest() const;
    bool is_connected() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // u < v, insertion order
    std::vector<std::vector<int>> adj_;
};

class GraphFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-list text: first non-comment line "n m", then m lines "u v", u < v.
// Lines starting with '#' are ignored.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int vertices);
Graph cycle_graph(int n);

// Graph with an arrival ordering; ordering[0] is the youngest vertex.
struct OrderedGraph {
    Graph graph;
    std::vector<int> ordering;
};

// Ordered-isomorphism class. Positions are 0 (youngest) .. h-1 (oldest); bit
// pair_index(a, b) is set iff positions a < b are adjacent.
struct OrderedKey {
    std::uint64_t bits = 0;
    int h = 0;

    bool operator==(const OrderedKey&) const = default;
    auto operator<=>(const OrderedKey&) const = default;
    bool has_edge(int a, int b) const;
    int edge_count() const;
    int degree(int pos) const;
    // Byte-string encoding: "h:hexbits".
    std::string encode() const;
};

struct OrderedKeyHash {
    std::size_t operator()(const OrderedKey& k) const {
        return std::hash<std::uint64_t>()(k.bits * 31 + static_cast<std::uint64_t>(k.h));
    }
};

inline constexpr int kMaxOrderedVertices = 10;

constexpr int pair_index(int a, int b) {
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;
}

OrderedKey canonical_key(const OrderedGraph& g);

// Ordered graph restricted to the positions in `positions_mask` (relative
// order kept), induced edges.
OrderedKey restrict_key(const OrderedKey& k, std::uint32_t positions_mask);
// Key after deleting the youngest position.
OrderedKey parent_key(const OrderedKey& k);
// Rebuilds an OrderedGraph whose vertex i sits at position i.
OrderedGraph key_to_ordered_graph(const OrderedKey& k);
// Applies a position permutation: new position of old position p is perm[p].
OrderedKey permute_key(const OrderedKey& k, const std::vector<int>& perm);
// "<n;a-b,c-d>" with positions, used in priority-list files.
std::string key_to_text(const OrderedKey& k);
OrderedKey key_from_text(const std::string& text);

}  // namespace ovr
