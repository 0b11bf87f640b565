#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ovr/builder.hpp"

namespace ovr {

// Strategy tree of an abstract Builder: node b at depth t stands for a list
// G^1..G^t; an internal node holds the next construction step and has one
// child per color of the new vertex.
struct TreeNode {
    int parent = -1;
    int depth = 0;
    std::vector<int> prefix;          // colors leading here
    ColoredGraph graph;               // G^t (empty at the root)
    bool leaf = false;
    ConstructionStep step;            // internal nodes only (used, attach)
    std::vector<int> children;        // one per color
    std::vector<std::uint64_t> f;     // multiplicity of G^1..G^t
};

struct AbstractTree {
    int r = 2;
    std::vector<TreeNode> nodes;      // nodes[0] is the root
    int depth() const;
    // G^1..G^t along the path to `node`.
    std::vector<const ColoredGraph*> path_list(int node) const;
};

// Next construction step given the list so far and the colors played, or
// nullopt to stop (leaf).
using AbstractStrategy =
    std::function<std::optional<ConstructionStep>(const std::vector<const ColoredGraph*>&, const std::vector<int>&)>;

AbstractTree grow_tree(int r, const AbstractStrategy& strategy, int max_depth);

// The abstract Builder strategy for (F, r, theta) unfolded over all painter
// color sequences; leaves hold a monochromatic F.
AbstractTree build_abstract_tree(const Graph& F, int r, const Rational& theta, int max_depth = 8);

// Fills f bottom-up: leaves count 1 for their last graph; an internal node
// takes the max over children plus, for the graphs it uses, the children's
// demand for the new graph.
void compute_multiplicities(AbstractTree& tree);

// Repetitions of the step at `node`: sum over colors of the child's demand
// for the new graph.
std::uint64_t repetitions(const AbstractTree& tree, int node);
// Longest root-to-leaf sum of repetitions.
std::uint64_t max_plan_length(const AbstractTree& tree);

struct ConcreteOutcome {
    bool mono_found = false;
    long steps = 0;
    int leaf = -1;
    bool legal = true;   // final board satisfies the (theta, 0) restriction
};

// Plays the repeated-copies plan against a concrete painter on a real board.
ConcreteOutcome play_concrete(const AbstractTree& tree, const Graph& F, const Rational& theta,
                              const AbstractPainter& painter);

}  // namespace ovr
