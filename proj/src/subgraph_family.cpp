#include "ovr/subgraph_family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace ovr {

namespace {

void collect_tuples(const Graph& F, std::vector<int>& tuple, std::vector<char>& used,
                    std::vector<std::unordered_set<std::uint64_t>>& masks) {
    int h = static_cast<int>(tuple.size());
    if (h > 0) {
        std::uint64_t bits = 0;
        for (int a = 0; a < h; ++a)
            for (int b = a + 1; b < h; ++b)
                if (F.adjacent(tuple[a], tuple[b])) bits |= std::uint64_t{1} << pair_index(a, b);
        masks[h].insert(bits);
    }
    if (h == F.vertex_count()) return;
    for (int v = 0; v < F.vertex_count(); ++v) {
        if (used[v]) continue;
        used[v] = 1;
        tuple.push_back(v);
        collect_tuples(F, tuple, used, masks);
        tuple.pop_back();
        used[v] = 0;
    }
}

}  // namespace

SubgraphFamily SubgraphFamily::enumerate(const Graph& F, bool induced_only) {
    if (F.edge_count() == 0) throw std::invalid_argument("F must have at least one edge");
    if (F.vertex_count() > kMaxOrderedVertices)
        throw std::invalid_argument("F has more than " + std::to_string(kMaxOrderedVertices) + " vertices");
    SubgraphFamily fam;
    fam.source_ = F;
    fam.induced_only_ = induced_only;
    int n = F.vertex_count();

    // Induced edge sets of all ordered vertex tuples; every ordered subgraph
    // is an edge subset of one of them.
    std::vector<std::unordered_set<std::uint64_t>> masks(n + 1);
    std::vector<int> tuple;
    std::vector<char> used(n, 0);
    collect_tuples(F, tuple, used, masks);

    std::vector<OrderedKey> keys;
    for (int h = 1; h <= n; ++h) {
        std::set<std::uint64_t> all;
        for (std::uint64_t m : masks[h]) {
            if (induced_only) {
                all.insert(m);
                continue;
            }
            for (std::uint64_t s = m;; s = (s - 1) & m) {
                all.insert(s);
                if (s == 0) break;
            }
        }
        for (std::uint64_t b : all) keys.push_back(OrderedKey{b, h});
    }
    fam.nodes_.resize(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        fam.nodes_[i].key = keys[i];
        fam.index_.emplace(keys[i], static_cast<int>(i));
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
        FamilyNode& nd = fam.nodes_[i];
        if (nd.key.h > 1) {
            int p = fam.find(parent_key(nd.key));
            if (p < 0) throw std::logic_error("family not closed under youngest-vertex deletion");
            nd.parent = p;
            fam.nodes_[p].children.push_back(static_cast<int>(i));
        }
        nd.is_full = nd.key.h == n && nd.key.edge_count() == F.edge_count();
        if (nd.is_full) fam.full_.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
        FamilyNode& nd = fam.nodes_[i];
        int cur = static_cast<int>(i);
        while (cur >= 0) {
            nd.ancestors.push_back(cur);
            cur = fam.nodes_[cur].parent;
        }
        std::set<int> subs;
        int h = nd.key.h;
        for (std::uint32_t U = 1; U < (1u << h); U += 2) {
            OrderedKey r = restrict_key(nd.key, U);
            for (std::uint64_t s = r.bits;; s = (s - 1) & r.bits) {
                int id = fam.find(OrderedKey{s, r.h});
                if (id >= 0) subs.insert(id);
                if (s == 0) break;
            }
        }
        nd.youngest_subgraphs.assign(subs.begin(), subs.end());
    }
    return fam;
}

int SubgraphFamily::find(const OrderedKey& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> SubgraphFamily::children(const std::vector<char>& in_set) const {
    std::vector<int> out;
    bool empty = std::none_of(in_set.begin(), in_set.end(), [](char c) { return c != 0; });
    if (empty) return {root()};
    for (int id = 0; id < size(); ++id) {
        if (in_set[id]) continue;
        int p = nodes_[id].parent;
        if (p >= 0 && in_set[p]) out.push_back(id);
    }
    return out;
}

}  // namespace ovr
