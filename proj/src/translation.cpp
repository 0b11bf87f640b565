#include "ovr/translation.hpp"

#include <algorithm>

#include "ovr/errors.hpp"

namespace ovr {

int AbstractTree::depth() const {
    int d = 0;
    for (const auto& n : nodes) d = std::max(d, n.depth);
    return d;
}

std::vector<const ColoredGraph*> AbstractTree::path_list(int node) const {
    std::vector<const ColoredGraph*> out;
    for (int b = node; b > 0; b = nodes[b].parent) out.push_back(&nodes[b].graph);
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

Composition compose_step(const std::vector<const ColoredGraph*>& list, const ConstructionStep& step, int depth) {
    std::vector<const ColoredGraph*> parts;
    for (int i : step.used) {
        if (i < 0 || i >= static_cast<int>(list.size())) throw std::invalid_argument("construction uses a graph not on the list");
        parts.push_back(list[i]);
    }
    return compose(parts, step.attach, depth + 1);
}

}  // namespace

AbstractTree grow_tree(int r, const AbstractStrategy& strategy, int max_depth) {
    if (r < 1) throw std::invalid_argument("at least one color is required");
    AbstractTree tree;
    tree.r = r;
    tree.nodes.emplace_back();
    // Children are appended after their parent, so index order is a BFS order.
    for (std::size_t b = 0; b < tree.nodes.size(); ++b) {
        std::vector<const ColoredGraph*> list = tree.path_list(static_cast<int>(b));
        std::optional<ConstructionStep> step = strategy(list, tree.nodes[b].prefix);
        if (!step) {
            tree.nodes[b].leaf = true;
            continue;
        }
        int depth = tree.nodes[b].depth;
        if (depth >= max_depth) throw ResourceLimit("abstract strategy tree deeper than " + std::to_string(max_depth));
        Composition comp = compose_step(list, *step, depth);
        step->color = -1;
        tree.nodes[b].step = std::move(*step);
        for (int s = 0; s < r; ++s) {
            TreeNode child;
            child.parent = static_cast<int>(b);
            child.depth = depth + 1;
            child.prefix = tree.nodes[b].prefix;
            child.prefix.push_back(s);
            child.graph = comp.graph;
            child.graph.color[comp.new_vertex] = s;
            tree.nodes[b].children.push_back(static_cast<int>(tree.nodes.size()));
            tree.nodes.push_back(std::move(child));
        }
    }
    return tree;
}

AbstractTree build_abstract_tree(const Graph& F, int r, const Rational& theta, int max_depth) {
    // Replays the session under each color prefix; the step after the prefix
    // is the node's construction, and a session won exactly at the prefix
    // marks a leaf.
    AbstractStrategy strategy = [&](const std::vector<const ColoredGraph*>&,
                                    const std::vector<int>& prefix) -> std::optional<ConstructionStep> {
        SessionOptions opt;
        opt.check_legality = false;
        opt.max_steps = static_cast<long>(prefix.size()) + 1;
        AbstractSession s = abuild_session(F, r, theta, scripted_painter(prefix), opt);
        if (s.builder_won && s.steps.size() <= prefix.size()) {
            if (s.steps.size() < prefix.size()) throw InvariantViolation("session ended before its color prefix");
            return std::nullopt;
        }
        return s.steps[prefix.size()];
    };
    AbstractTree tree = grow_tree(r, strategy, max_depth);
    compute_multiplicities(tree);
    return tree;
}

void compute_multiplicities(AbstractTree& tree) {
    for (int b = static_cast<int>(tree.nodes.size()) - 1; b >= 0; --b) {
        TreeNode& node = tree.nodes[b];
        int t = node.depth;
        node.f.assign(t, 0);
        if (node.leaf) {
            if (t > 0) node.f[t - 1] = 1;
            continue;
        }
        std::uint64_t demand = 0;
        for (int c : node.children) {
            const auto& cf = tree.nodes[c].f;
            for (int i = 0; i < t; ++i) node.f[i] = std::max(node.f[i], cf[i]);
            demand += cf[t];
        }
        for (int i : node.step.used) node.f[i] += demand;
    }
}

std::uint64_t repetitions(const AbstractTree& tree, int node) {
    const TreeNode& b = tree.nodes[node];
    if (b.leaf) return 0;
    std::uint64_t total = 0;
    for (int c : b.children) total += tree.nodes[c].f[b.depth];
    return total;
}

std::uint64_t max_plan_length(const AbstractTree& tree) {
    std::vector<std::uint64_t> best(tree.nodes.size(), 0);
    for (int b = static_cast<int>(tree.nodes.size()) - 1; b >= 0; --b) {
        std::uint64_t below = 0;
        for (int c : tree.nodes[b].children) below = std::max(below, best[c]);
        best[b] = below + repetitions(tree, b);
    }
    return best[0];
}

ConcreteOutcome play_concrete(const AbstractTree& tree, const Graph& F, const Rational& theta,
                              const AbstractPainter& painter) {
    constexpr std::uint64_t kMaxSteps = 2'000'000;
    if (max_plan_length(tree) > kMaxSteps) throw ResourceLimit("concrete plan longer than the step cap");
    int r = tree.r;
    Board board(r);
    ConcreteOutcome out;
    // pool[i]: unused vertex-disjoint copies of G^i on the board, as vertex maps.
    std::vector<std::vector<std::vector<int>>> pool;
    int b = 0;
    while (!tree.nodes[b].leaf) {
        const TreeNode& node = tree.nodes[b];
        int t = node.depth;
        std::vector<const ColoredGraph*> list = tree.path_list(b);
        Composition comp = compose_step(list, node.step, t);
        std::uint64_t reps = repetitions(tree, b);
        std::vector<std::vector<std::vector<int>>> created(r);
        for (std::uint64_t rep = 0; rep < reps; ++rep) {
            std::vector<int> image(comp.graph.graph.vertex_count(), -1);
            Move move;
            for (std::size_t k = 0; k < node.step.used.size(); ++k) {
                auto& avail = pool[node.step.used[k]];
                if (avail.empty()) throw InvariantViolation("plan ran out of copies of a list graph");
                std::vector<int> copy = std::move(avail.back());
                avail.pop_back();
                for (std::size_t x = 0; x < copy.size(); ++x) image[comp.placement[k][x]] = copy[x];
                for (int x : node.step.attach[k]) move.neighbors.push_back(copy[x]);
            }
            int v = board.present(move);
            image[comp.new_vertex] = v;
            int c = painter(board);
            if (c < 0 || c >= r) throw std::invalid_argument("painter returned an invalid color");
            board.paint(c);
            ++out.steps;
            created[c].push_back(std::move(image));
        }
        int sigma = -1;
        for (int s = 0; s < r && sigma < 0; ++s)
            if (created[s].size() >= tree.nodes[node.children[s]].f[t]) sigma = s;
        if (sigma < 0) throw InvariantViolation("no color reached its demanded number of copies");
        pool.resize(t + 1);
        pool[t] = std::move(created[sigma]);
        b = node.children[sigma];
        for (int i = 0; i <= t; ++i)
            if (pool[i].size() < tree.nodes[b].f[i]) throw InvariantViolation("copy pool below its demand");
    }
    out.leaf = b;
    out.mono_found = detect_mono(board, F).has_value();
    out.legal = legal_graph(board.graph(), Restriction::generalized(theta, Rational(0)));
    return out;
}

}  // namespace ovr
