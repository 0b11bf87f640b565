#include "ovr/builder.hpp"

#include <algorithm>
#include <climits>
#include <memory>
#include <numeric>
#include <random>
#include <tuple>
#include <unordered_map>

namespace ovr {

Composition compose(const std::vector<const ColoredGraph*>& parts, const std::vector<std::vector<int>>& attach,
                    long stamp) {
    if (attach.size() != parts.size()) throw std::invalid_argument("one attachment list per part is required");
    struct Slot {
        long stamp;
        int part, vertex;
    };
    std::vector<Slot> slots;
    for (int k = 0; k < static_cast<int>(parts.size()); ++k)
        for (int x = 0; x < parts[k]->graph.vertex_count(); ++x) slots.push_back({parts[k]->stamp[x], k, x});
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        return std::tie(a.stamp, a.part, a.vertex) < std::tie(b.stamp, b.part, b.vertex);
    });
    Composition out;
    out.placement.resize(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) out.placement[k].assign(parts[k]->graph.vertex_count(), -1);
    int n = static_cast<int>(slots.size());
    out.graph.graph = Graph(n + 1);
    out.graph.color.resize(n + 1);
    out.graph.stamp.resize(n + 1);
    for (int i = 0; i < n; ++i) {
        out.placement[slots[i].part][slots[i].vertex] = i;
        out.graph.color[i] = parts[slots[i].part]->color[slots[i].vertex];
        out.graph.stamp[i] = slots[i].stamp;
    }
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (auto [u, v] : parts[k]->graph.edges()) out.graph.graph.add_edge(out.placement[k][u], out.placement[k][v]);
    out.new_vertex = n;
    out.graph.color[n] = -1;
    out.graph.stamp[n] = stamp;
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (int x : attach[k]) {
            if (x < 0 || x >= parts[k]->graph.vertex_count()) throw std::invalid_argument("attachment vertex out of range");
            out.graph.graph.add_edge(out.placement[k][x], n);
        }
    return out;
}

AbstractPainter random_painter(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const Board& b) { return static_cast<int>((*rng)() % static_cast<std::uint64_t>(b.colors())); };
}

AbstractPainter greedy_painter(const Graph& F, int r) {
    std::vector<Graph> H(r, F);
    return [H](const Board& b) { return greedy_decide(b, H); };
}

AbstractPainter paint_painter(const PriorityList& list) {
    return [list](const Board& b) { return paint_decide(b, list).color; };
}

AbstractPainter scripted_painter(std::vector<int> script, int fallback) {
    auto pos = std::make_shared<std::size_t>(0);
    return [script = std::move(script), fallback, pos](const Board&) {
        return *pos < script.size() ? script[(*pos)++] : fallback;
    };
}

int find_dominating_color(const std::vector<int>& sizes, const std::function<int(const std::vector<int>&)>& f) {
    int r = static_cast<int>(sizes.size());
    for (int x : sizes)
        if (x <= 0) throw std::invalid_argument("every factor must be nonempty");
    std::size_t total = 1;
    for (int x : sizes) total *= static_cast<std::size_t>(x);
    std::vector<int> value(total);
    std::vector<int> idx(r, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        value[flat] = f(idx);
        for (int s = r - 1; s >= 0; --s) {
            if (++idx[s] < sizes[s]) break;
            idx[s] = 0;
        }
    }
    for (int sigma = 0; sigma < r; ++sigma) {
        std::vector<char> covered(sizes[sigma], 0);
        std::fill(idx.begin(), idx.end(), 0);
        for (std::size_t flat = 0; flat < total; ++flat) {
            if (value[flat] == sigma) covered[idx[sigma]] = 1;
            for (int s = r - 1; s >= 0; --s) {
                if (++idx[s] < sizes[s]) break;
                idx[s] = 0;
            }
        }
        if (std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) return sigma;
    }
    throw InvariantViolation("no dominating color exists");
}

namespace {

struct Ref {
    int entry;
    std::vector<int> central;  // position -> vertex of the list entry
};

// Old position p of the secondary class sits at partner position perm[p].
std::vector<int> partner_perm(int h, int k) {
    std::vector<int> perm(h);
    for (int p = 0; p < h; ++p) perm[p] = p < k ? p + 1 : (p == k ? 0 : p);
    return perm;
}

}  // namespace

AbstractSession abuild_session(const Graph& F, int r, const Rational& theta, const AbstractPainter& painter,
                               const SessionOptions& options) {
    if (r < 2) throw std::invalid_argument("at least two colors are required");
    SubgraphFamily fam = SubgraphFamily::enumerate(F);
    CwRun state(fam, r, theta, CwVariant::Full, false);
    Restriction legal_check = Restriction::generalized(theta, Rational(0));

    AbstractSession out;
    {
        mpz_class bound = mpz_class(r) * r;
        for (int e = 0; e < r + 2; ++e) bound *= fam.size();
        out.step_bound = bound.fits_slong_p() ? bound.get_si() : LONG_MAX;
    }
    std::vector<std::unordered_map<int, Ref>> G(r);
    std::vector<std::vector<int>> central_of;  // per list entry

    // One construction step for the given class per color; returns true
    // when the new graph holds a monochromatic F or the step cap is hit.
    auto construct = [&](const std::vector<int>& tuple) {
        ConstructionStep step;
        step.tuple = tuple;
        std::vector<const ColoredGraph*> parts;
        std::vector<int> part_of_color(r, -1);
        std::vector<const Ref*> parent_ref(r, nullptr);
        for (int s = 0; s < r; ++s) {
            const auto& key = fam.node(tuple[s]).key;
            if (key.h < 2) continue;
            auto it = G[s].find(fam.node(tuple[s]).parent);
            if (it == G[s].end()) throw InvariantViolation("parent class has no graph on the list");
            parent_ref[s] = &it->second;
            std::vector<int> att;
            for (int b = 1; b < key.h; ++b)
                if (key.has_edge(0, b)) att.push_back(it->second.central[b - 1]);
            part_of_color[s] = static_cast<int>(parts.size());
            parts.push_back(&out.list[it->second.entry]);
            step.used.push_back(it->second.entry);
            step.attach.push_back(std::move(att));
        }
        Composition comp = compose(parts, step.attach, static_cast<long>(out.steps.size()) + 1);
        Board board = Board::from_parts(r, comp.graph.graph, comp.graph.color);
        int c = painter(board);
        if (c < 0 || c >= r) throw std::invalid_argument("painter returned an invalid color");
        board.paint(c);
        comp.graph.color[comp.new_vertex] = c;
        step.color = c;

        // The new copy of the class offered in color c becomes the central copy.
        const auto& key = fam.node(tuple[c]).key;
        std::vector<int> central(key.h);
        central[0] = comp.new_vertex;
        for (int b = 1; b < key.h; ++b) central[b] = comp.placement[part_of_color[c]][parent_ref[c]->central[b - 1]];

        if (options.check_legality && !legal_graph(comp.graph.graph, legal_check)) out.all_legal = false;
        out.list.push_back(std::move(comp.graph));
        out.steps.push_back(std::move(step));
        central_of.push_back(std::move(central));

        if (detect_mono(board, F, board.size() - 1)) {
            out.builder_won = true;
            out.winning_entry = static_cast<int>(out.list.size()) - 1;
            return true;
        }
        if (static_cast<long>(out.steps.size()) > out.step_bound) throw InvariantViolation("step bound exceeded");
        return options.max_steps >= 0 && static_cast<long>(out.steps.size()) >= options.max_steps;
    };

    for (;;) {
        ++out.rounds;
        if (out.rounds > r * fam.size()) throw InvariantViolation("round bound exceeded without a monochromatic F");
        std::vector<RoundTrace> look(r);
        for (int s = 0; s < r; ++s) {
            CwRun copy = state;
            look[s] = copy.play_round(s);
        }
        std::vector<int> j(r, 0);
        int sigma = -1;
        while (sigma < 0) {
            std::vector<int> sizes(r);
            std::size_t total = 1;
            for (int s = 0; s < r; ++s) {
                sizes[s] = static_cast<int>(look[s].primary[j[s]].size());
                total *= static_cast<std::size_t>(sizes[s]);
            }
            std::size_t cap = 1;
            for (int s = 0; s < r; ++s) cap *= static_cast<std::size_t>(fam.size());
            if (total > cap) throw InvariantViolation("product of primary batches exceeds |S(F)|^r");
            std::vector<int> color_of(total), entry_of(total);
            std::vector<int> idx(r, 0);
            for (std::size_t flat = 0; flat < total; ++flat) {
                std::vector<int> tuple(r);
                for (int s = 0; s < r; ++s) tuple[s] = look[s].primary[j[s]][idx[s]];
                if (construct(tuple)) return out;
                color_of[flat] = out.steps.back().color;
                entry_of[flat] = static_cast<int>(out.list.size()) - 1;
                for (int s = r - 1; s >= 0; --s) {
                    if (++idx[s] < sizes[s]) break;
                    idx[s] = 0;
                }
            }

            std::vector<int> radix(r, 1);
            for (int s = r - 2; s >= 0; --s) radix[s] = radix[s + 1] * sizes[s + 1];
            auto flat_of = [&](const std::vector<int>& t) {
                std::size_t f = 0;
                for (int s = 0; s < r; ++s) f += static_cast<std::size_t>(t[s]) * radix[s];
                return f;
            };
            int hat = find_dominating_color(sizes, [&](const std::vector<int>& t) { return color_of[flat_of(t)]; });

            // Earliest step that produced a central copy of each class in color hat.
            const auto& primary = look[hat].primary[j[hat]];
            for (int a = 0; a < sizes[hat]; ++a) {
                int entry = -1;
                for (std::size_t flat = 0; flat < total && entry < 0; ++flat)
                    if (static_cast<int>((flat / radix[hat]) % sizes[hat]) == a && color_of[flat] == hat)
                        entry = entry_of[flat];
                if (entry < 0) throw InvariantViolation("dominating color misses a class");
                G[hat][primary[a]] = Ref{entry, central_of[entry]};
            }
            if (j[hat] < static_cast<int>(look[hat].secondary.size())) {
                const auto& rounds = look[hat].secondary[j[hat]];
                for (int k = 1; k <= static_cast<int>(rounds.size()); ++k)
                    for (int node : rounds[k - 1]) {
                        const auto& key = fam.node(node).key;
                        std::vector<int> perm = partner_perm(key.h, k);
                        int partner = fam.find(permute_key(key, perm));
                        auto it = G[hat].find(partner);
                        if (partner < 0 || it == G[hat].end() ||
                            std::find(primary.begin(), primary.end(), partner) == primary.end())
                            throw InvariantViolation("secondary class without a partner in the primary batch");
                        Ref ref{it->second.entry, std::vector<int>(key.h)};
                        for (int p = 0; p < key.h; ++p) ref.central[p] = it->second.central[perm[p]];
                        G[hat][node] = std::move(ref);
                    }
            }
            if (++j[hat] >= static_cast<int>(look[hat].primary.size())) sigma = hat;
        }

        state.play_round(sigma);
        out.alpha.push_back(sigma);
        for (int s = 0; s < r; ++s)
            for (int node = 0; node < fam.size(); ++node)
                if (state.in_family(s, node) && !G[s].count(node))
                    throw InvariantViolation("a class of the weight computation has no graph on the list");
    }
}

}  // namespace ovr
