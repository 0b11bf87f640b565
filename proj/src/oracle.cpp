#include "ovr/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace ovr {

namespace {

// Canonical string of one connected component (vertices `comp` of g) with
// the given colors: minimum over orderings compatible with a colour/degree
// refinement of (colors, adjacency bits).
std::string component_key(const Graph& g, const std::vector<int>& comp, const std::vector<int>& colors) {
    int k = static_cast<int>(comp.size());
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) local[comp[i]] = i;

    std::vector<long> label(k);
    for (int i = 0; i < k; ++i) label[i] = static_cast<long>(colors[comp[i]]) * 1024 + g.degree(comp[i]);
    for (int classes = -1;;) {
        std::vector<std::vector<long>> sig(k);
        for (int i = 0; i < k; ++i) {
            sig[i].push_back(label[i]);
            std::vector<long> nb;
            for (int w : g.neighbors(comp[i])) nb.push_back(label[local[w]]);
            std::sort(nb.begin(), nb.end());
            sig[i].insert(sig[i].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<long>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int i = 0; i < k; ++i)
            label[i] = std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin();
        int now = static_cast<int>(sorted.size());
        if (now == classes) break;
        classes = now;
    }

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return label[a] < label[b]; });
    std::vector<std::pair<int, int>> cells;  // [begin, end) in order
    for (int i = 0; i < k;) {
        int j = i;
        while (j < k && label[order[j]] == label[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }

    std::string head(1, static_cast<char>(k));
    for (int i = 0; i < k; ++i) head.push_back(static_cast<char>(colors[comp[order[i]]]));

    std::string best;
    auto encode = [&] {
        std::string s = head;
        unsigned char acc = 0;
        int bits = 0;
        for (int b = 1; b < k; ++b)
            for (int a = 0; a < b; ++a) {
                acc = static_cast<unsigned char>(acc << 1 | (g.adjacent(comp[order[a]], comp[order[b]]) ? 1 : 0));
                if (++bits == 8) {
                    s.push_back(static_cast<char>(acc));
                    acc = 0;
                    bits = 0;
                }
            }
        if (bits) s.push_back(static_cast<char>(acc << (8 - bits)));
        if (best.empty() || s < best) best = std::move(s);
    };
    auto rec = [&](auto& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            encode();
            return;
        }
        auto [lo, hi] = cells[cell];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            self(self, cell + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(rec, 0);
    return best;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp_of(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp_of[s] >= 0) continue;
        out.emplace_back();
        auto& c = out.back();
        comp_of[s] = static_cast<int>(out.size()) - 1;
        c.push_back(s);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (int w : g.neighbors(c[i]))
                if (comp_of[w] < 0) {
                    comp_of[w] = comp_of[s];
                    c.push_back(w);
                }
    }
    return out;
}

class Solver {
public:
    Solver(const GameConfig& cfg, int max_steps, std::size_t budget)
        : cfg_(cfg), max_steps_(max_steps), budget_(budget) {}

    bool wins(const Board& b) {
        if (b.size() >= max_steps_) return false;
        std::string key = canonical_colored_key(b.graph(), b.colors_by_vertex(), cfg_.r);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (memo_.size() >= budget_) throw ResourceLimit("oracle state budget exhausted");
        bool result = false;
        for (const Move& m : moves(b))
            if (forces(b, m)) {
                result = true;
                break;
            }
        memo_.emplace(std::move(key), result);
        return result;
    }

    // Every color either completes F or leads to a Builder-won board.
    bool forces(const Board& b, const Move& m) {
        for (int c = 0; c < cfg_.r; ++c)
            if (!painter_loses_with(b, m, c)) return false;
        return true;
    }

    bool painter_loses_with(const Board& b, const Move& m, int c) {
        Board next = b;
        int v = next.present(m);
        next.paint(c);
        if (detect_mono(next, cfg_.F, v)) return true;
        return wins(next);
    }

    // Legal moves, one per class of boards-with-pending-vertex.
    std::vector<Move> moves(const Board& b) {
        int n = b.size();
        std::vector<Move> out;
        std::set<std::string> seen;
        std::vector<int> colors = b.colors_by_vertex();
        colors.push_back(cfg_.r);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Move m;
            for (int u = 0; u < n; ++u)
                if (mask >> u & 1u) m.neighbors.push_back(u);
            Board next = b;
            next.present(m);
            std::string key = canonical_colored_key(next.graph(), colors, cfg_.r);
            // Legality is invariant under isomorphism, so one test per class.
            if (!seen.insert(std::move(key)).second) continue;
            if (!legal(b, m, cfg_.restriction)) continue;
            out.push_back(std::move(m));
        }
        return out;
    }

    std::size_t states() const { return memo_.size(); }

private:
    const GameConfig& cfg_;
    int max_steps_;
    std::size_t budget_;
    std::unordered_map<std::string, bool> memo_;
};

}  // namespace

std::string canonical_colored_key(const Graph& g, const std::vector<int>& colors, int r) {
    auto comps = components(g);
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    // Color symmetry is folded in for small r only; the key stays canonical
    // for isomorphism either way.
    bool permute_colors = r <= 4;
    std::string best;
    std::vector<int> recolored(colors.size());
    do {
        for (std::size_t v = 0; v < colors.size(); ++v) recolored[v] = colors[v] >= r ? r : perm[colors[v]];
        std::vector<std::string> parts;
        for (const auto& c : comps) parts.push_back(component_key(g, c, recolored));
        std::sort(parts.begin(), parts.end());
        std::string s;
        for (const auto& p : parts) s += p;
        if (best.empty() || s < best) best = std::move(s);
    } while (permute_colors && std::next_permutation(perm.begin(), perm.end()));
    return best;
}

OracleResult solve_game_exhaustive(const GameConfig& cfg, int max_steps, std::size_t state_budget) {
    if (cfg.r < 1) throw std::invalid_argument("at least one color is required");
    if (cfg.F.vertex_count() == 0) throw std::invalid_argument("F must have a vertex");
    if (max_steps < 0 || max_steps > 20) throw std::invalid_argument("max_steps must lie in [0, 20]");
    Solver solver(cfg, max_steps, state_budget);
    OracleResult res;
    Board b(cfg.r);
    res.builder_wins = solver.wins(b);

    // Principal variation.
    while (b.size() < max_steps) {
        bool builder = solver.wins(b);
        auto ms = solver.moves(b);
        if (ms.empty()) break;
        const Move* chosen = &ms.front();
        if (builder)
            for (const auto& m : ms)
                if (solver.forces(b, m)) {
                    chosen = &m;
                    break;
                }
        int color = 0;
        bool found = false;
        for (int c = 0; c < cfg.r && !found; ++c) {
            Board next = b;
            int v = next.present(*chosen);
            next.paint(c);
            bool mono = detect_mono(next, cfg.F, v).has_value();
            if (builder ? !mono : (!mono && !solver.wins(next))) {
                color = c;
                found = true;
            }
        }
        res.principal_variation.push_back({chosen->neighbors, color});
        int v = b.present(*chosen);
        b.paint(color);
        if (detect_mono(b, cfg.F, v)) break;
    }
    res.states = solver.states();
    return res;
}

Rational min_winning_density(const Graph& F, int r, int max_steps, std::size_t state_budget) {
    std::set<Rational> cand_set;
    for (int v = 1; v <= max_steps; ++v)
        for (int e = 1; e <= v * (v - 1) / 2; ++e) cand_set.insert(make_rational(e, v));
    std::vector<Rational> cand(cand_set.begin(), cand_set.end());
    auto builder_wins = [&](const Rational& d) {
        GameConfig cfg{F, r, Restriction::density(d)};
        return solve_game_exhaustive(cfg, max_steps, state_budget).builder_wins;
    };
    if (cand.empty() || !builder_wins(cand.back()))
        throw std::runtime_error("Builder cannot win within " + std::to_string(max_steps) + " steps at any candidate density");
    std::size_t lo = 0, hi = cand.size() - 1;  // answer in [lo, hi]
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (builder_wins(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

}  // namespace ovr
