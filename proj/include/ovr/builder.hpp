#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ovr/board.hpp"
#include "ovr/compute_weights.hpp"
#include "ovr/painter.hpp"

namespace ovr {

// An r-colored graph of the abstract game. Vertex order is arrival order,
// recorded by global step stamps.
struct ColoredGraph {
    Graph graph;
    std::vector<int> color;
    std::vector<long> stamp;
};

// Disjoint union of `parts` (re-sorted by stamp, then part, then vertex)
// plus one new vertex with the given stamp, adjacent to attach[k] (vertices
// of parts[k]); the new vertex is last and uncolored (-1). placement[k][x]
// is the new index of vertex x of parts[k].
struct Composition {
    ColoredGraph graph;
    std::vector<std::vector<int>> placement;
    int new_vertex = -1;
};
Composition compose(const std::vector<const ColoredGraph*>& parts, const std::vector<std::vector<int>>& attach,
                    long stamp);

// Chooses a color for the last vertex of the board.
using AbstractPainter = std::function<int(const Board&)>;

AbstractPainter random_painter(std::uint64_t seed);
AbstractPainter greedy_painter(const Graph& F, int r);
AbstractPainter paint_painter(const PriorityList& list);
// Plays script[t] at step t and `fallback` afterwards.
AbstractPainter scripted_painter(std::vector<int> script, int fallback = 0);

struct ConstructionStep {
    std::vector<int> used;                  // list indices, 0-based
    std::vector<std::vector<int>> attach;   // per used entry, vertices of that graph
    std::vector<int> tuple;                 // class node per color (-1 never)
    int color = -1;
};

struct AbstractSession {
    std::vector<ColoredGraph> list;
    std::vector<ConstructionStep> steps;
    std::vector<int> alpha;        // realized colors per completed round, 0-based
    bool builder_won = false;
    int winning_entry = -1;        // list index containing a monochromatic F
    long step_bound = 0;           // r^2 |S(F)|^(r+2)
    bool all_legal = true;         // every listed graph satisfies mu_theta >= 0
    int rounds = 0;
};

struct SessionOptions {
    bool check_legality = true;
    long max_steps = -1;           // stop early (incomplete session) if >= 0
};

// The abstract Builder strategy against `painter`. Throws InvariantViolation
// if the step bound is exceeded or an internal correspondence fails.
AbstractSession abuild_session(const Graph& F, int r, const Rational& theta, const AbstractPainter& painter,
                               const SessionOptions& options = {});

// Lowest color sigma such that every element of X_sigma has companions with
// f = sigma. `f` gets one index per color. Throws if none exists.
int find_dominating_color(const std::vector<int>& sizes, const std::function<int(const std::vector<int>&)>& f);

}  // namespace ovr
