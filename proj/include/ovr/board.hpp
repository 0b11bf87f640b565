#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ovr/graph.hpp"
#include "ovr/rational.hpp"

namespace ovr {

// Either e(H)/v(H) <= d for every subgraph H, or v(H) - e(H)*theta >= beta
// for every nonempty H.
struct Restriction {
    enum class Kind { Density, Generalized };
    Kind kind = Kind::Density;
    Rational d, theta, beta;

    static Restriction density(const Rational& d);
    static Restriction generalized(const Rational& theta, const Rational& beta);

    // Integer form: H is allowed iff edge_profit*e(H) - vertex_cost*v(H) <= bound.
    std::int64_t edge_profit = 0, vertex_cost = 0, bound = 0;

    std::string describe() const;
};

struct GameConfig {
    Graph F;
    int r = 2;
    Restriction restriction;
};

struct Move {
    std::vector<int> neighbors;  // existing board vertices
};

// Vertex i is the (i+1)-th to arrive. At most one vertex, the newest, may be
// uncolored (pending).
class Board {
public:
    explicit Board(int colors) : r_(colors) {}
    // Vertex order is arrival order; colors[v] = -1 allowed for the last
    // vertex only.
    static Board from_parts(int colors, Graph g, std::vector<int> vertex_colors);

    int size() const { return graph_.vertex_count(); }
    int colors() const { return r_; }
    const Graph& graph() const { return graph_; }
    int color(int v) const { return color_[v]; }
    const std::vector<int>& colors_by_vertex() const { return color_; }
    bool has_pending() const { return !color_.empty() && color_.back() < 0; }

    // Adds the pending vertex; throws if one is already pending or a
    // neighbor index is invalid or repeated.
    int present(const Move& move);
    void paint(int color);

private:
    int r_;
    Graph graph_;
    std::vector<int> color_;
};

// max over vertex sets U containing `forced` of edge_profit*e(U) -
// vertex_cost*|U| (induced edges), by minimum cut on the closure network.
// With nothing forced the empty set counts (value 0).
std::int64_t max_weight_closure(const Graph& g, std::int64_t edge_profit, std::int64_t vertex_cost,
                                const std::vector<int>& forced = {});

// min over vertex sets U containing `forced` of v(U) - e(U)*theta; with
// nothing forced, over nonempty U.
Rational min_mu(const Graph& g, const Rational& theta, const std::vector<int>& forced = {});

// Every nonempty subgraph of g satisfies the restriction.
bool legal_graph(const Graph& g, const Restriction& restriction);
// The board (fully painted, assumed legal) plus the move still satisfies the
// restriction; only subgraphs through the new vertex are examined.
bool legal(const Board& board, const Move& move, const Restriction& restriction);

// Embedding (F vertex -> host vertex) of F as a subgraph of `host` using only
// vertices with allowed[v] set, and `anchor` if it is >= 0.
std::optional<std::vector<int>> find_embedding(const Graph& F, const Graph& host, const std::vector<char>& allowed,
                                               int anchor = -1);

// A copy of F inside one color class; with anchor >= 0 only copies through
// that vertex (in its color class) are sought.
std::optional<std::vector<int>> detect_mono(const Board& board, const Graph& F, int anchor = -1);

// Copies of the ordered class `key` in `host`: position p maps to vertex
// m[p], positions a < b map to vertices with m[a] > m[b] (vertex index is
// arrival order, position 0 is the youngest), edges of the class are edges
// of host. Only vertices v with colors[v] == color are used, except that
// `anchor` (if >= 0) is usable whatever its color and is forced at position
// 0. `visit` returns false to stop; the function returns true if stopped.
bool for_each_ordered_copy(const OrderedKey& key, const Graph& host, const std::vector<int>& colors, int color,
                           int anchor, const std::function<bool(const std::vector<int>&)>& visit);

bool has_ordered_copy(const OrderedKey& key, const Graph& host, const std::vector<int>& colors, int color,
                      int anchor);

}  // namespace ovr
