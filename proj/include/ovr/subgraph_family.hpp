#pragma once

#include <unordered_map>
#include <vector>

#include "ovr/graph.hpp"

namespace ovr {

struct FamilyNode {
    OrderedKey key;
    int parent = -1;            // -1 for the single-vertex root
    std::vector<int> children;  // nodes whose youngest-vertex deletion is this node
    bool is_full = false;       // an ordering of F itself
    // ancestors[i]: node obtained by deleting the i youngest vertices
    // (ancestors[0] is the node itself).
    std::vector<int> ancestors;
    // Nodes (J, order restricted to J) for every subgraph J containing the
    // youngest vertex, the node itself included. Sorted, unique.
    std::vector<int> youngest_subgraphs;
};

// The family of ordered-isomorphism classes of subgraphs of F, organised as
// a rooted tree by youngest-vertex deletion. Node ids are stable: sorted by
// (vertex count, key bits).
class SubgraphFamily {
public:
    static SubgraphFamily enumerate(const Graph& F, bool induced_only = false);

    int size() const { return static_cast<int>(nodes_.size()); }
    const FamilyNode& node(int id) const { return nodes_[id]; }
    const std::vector<FamilyNode>& nodes() const { return nodes_; }
    int root() const { return 0; }
    // -1 if the class is not a member.
    int find(const OrderedKey& key) const;
    const Graph& source() const { return source_; }
    bool induced_only() const { return induced_only_; }
    const std::vector<int>& full_nodes() const { return full_; }

    // Children of a downward-closed member set not already in it; {root} if
    // the set is empty.
    std::vector<int> children(const std::vector<char>& in_set) const;

private:
    Graph source_;
    bool induced_only_ = false;
    std::vector<FamilyNode> nodes_;
    std::unordered_map<OrderedKey, int, OrderedKeyHash> index_;
    std::vector<int> full_;
};

}  // namespace ovr
