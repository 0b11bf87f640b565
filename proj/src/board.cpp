#include "ovr/board.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

namespace ovr {

namespace {

std::int64_t to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("restriction parameters exceed 64 bits");
    return z.get_si();
}

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, std::int64_t,
                    boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                    boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;

class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : g_(nodes) {}

    void arc(int u, int v, std::int64_t cap) {
        auto cap_map = boost::get(boost::edge_capacity, g_);
        auto rev_map = boost::get(boost::edge_reverse, g_);
        auto e = boost::add_edge(u, v, g_).first;
        auto r = boost::add_edge(v, u, g_).first;
        cap_map[e] = cap;
        cap_map[r] = 0;
        rev_map[e] = r;
        rev_map[r] = e;
    }

    std::int64_t max_flow(int s, int t) { return boost::push_relabel_max_flow(g_, s, t); }

private:
    FlowGraph g_;
};

}  // namespace

Restriction Restriction::density(const Rational& d) {
    if (sgn(d) <= 0) throw std::invalid_argument("density restriction must be positive");
    Restriction r;
    r.kind = Kind::Density;
    r.d = d;
    // e/v <= a/b  <=>  b*e - a*v <= 0
    r.edge_profit = to_i64(d.get_den());
    r.vertex_cost = to_i64(d.get_num());
    r.bound = 0;
    return r;
}

Restriction Restriction::generalized(const Rational& theta, const Rational& beta) {
    if (sgn(theta) <= 0) throw std::invalid_argument("theta must be positive");
    Restriction r;
    r.kind = Kind::Generalized;
    r.theta = theta;
    r.beta = beta;
    // v - e*p/q >= s/t  <=>  t*p*e - t*q*v <= -q*s
    std::int64_t p = to_i64(theta.get_num()), q = to_i64(theta.get_den());
    std::int64_t s = to_i64(beta.get_num()), t = to_i64(beta.get_den());
    r.edge_profit = t * p;
    r.vertex_cost = t * q;
    r.bound = -q * s;
    return r;
}

std::string Restriction::describe() const {
    if (kind == Kind::Density) return "density " + format_rational(d);
    return "theta " + format_rational(theta) + " beta " + format_rational(beta);
}

int Board::present(const Move& move) {
    if (has_pending()) throw std::logic_error("a vertex is already waiting for its color");
    std::vector<int> nb = move.neighbors;
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw std::invalid_argument("repeated neighbor in move");
    for (int u : nb)
        if (u < 0 || u >= size()) throw std::invalid_argument("neighbor index out of range");
    int v = graph_.add_vertex();
    for (int u : nb) graph_.add_edge(u, v);
    color_.push_back(-1);
    return v;
}

Board Board::from_parts(int colors, Graph g, std::vector<int> vertex_colors) {
    if (static_cast<int>(vertex_colors.size()) != g.vertex_count())
        throw std::invalid_argument("one color per vertex is required");
    for (std::size_t v = 0; v < vertex_colors.size(); ++v) {
        int c = vertex_colors[v];
        bool pending_ok = c == -1 && v + 1 == vertex_colors.size();
        if (!pending_ok && (c < 0 || c >= colors)) throw std::invalid_argument("vertex color out of range");
    }
    Board b(colors);
    b.graph_ = std::move(g);
    b.color_ = std::move(vertex_colors);
    return b;
}

void Board::paint(int color) {
    if (!has_pending()) throw std::logic_error("no vertex to paint");
    if (color < 0 || color >= r_) throw std::invalid_argument("color out of range");
    color_.back() = color;
}

std::int64_t max_weight_closure(const Graph& g, std::int64_t edge_profit, std::int64_t vertex_cost,
                                const std::vector<int>& forced) {
    int n = g.vertex_count(), m = g.edge_count();
    int s = n + m, t = n + m + 1;
    std::int64_t total = edge_profit * m;
    std::int64_t inf = total + vertex_cost * n + 1;
    FlowNetwork net(n + m + 2);
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges()[i];
        net.arc(s, n + i, edge_profit);
        net.arc(n + i, u, inf);
        net.arc(n + i, v, inf);
    }
    for (int v = 0; v < n; ++v) net.arc(v, t, vertex_cost);
    for (int v : forced) net.arc(s, v, inf);
    // Forced vertices sit on the source side; their arcs to the sink are cut.
    return total - net.max_flow(s, t);
}

Rational min_mu(const Graph& g, const Rational& theta, const std::vector<int>& forced) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    std::int64_t p = to_i64(theta.get_num()), q = to_i64(theta.get_den());
    std::int64_t best;
    if (!forced.empty()) {
        best = max_weight_closure(g, p, q, forced);
    } else {
        best = max_weight_closure(g, p, q);
        if (best <= 0) {
            // The empty set may be the maximiser; require one vertex.
            best = INT64_MIN;
            for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, max_weight_closure(g, p, q, {v}));
        }
    }
    return make_rational(-best, q);
}

bool legal_graph(const Graph& g, const Restriction& restriction) {
    if (g.vertex_count() == 0) return true;
    const auto& R = restriction;
    if (R.bound >= 0) return max_weight_closure(g, R.edge_profit, R.vertex_cost) <= R.bound;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (max_weight_closure(g, R.edge_profit, R.vertex_cost, {v}) > R.bound) return false;
    return true;
}

bool legal(const Board& board, const Move& move, const Restriction& restriction) {
    if (board.has_pending()) throw std::logic_error("legality is checked before presenting");
    Board next = board;
    int v = next.present(move);
    const auto& R = restriction;
    return max_weight_closure(next.graph(), R.edge_profit, R.vertex_cost, {v}) <= R.bound;
}

namespace {

// `first`, then BFS over its component, then the remaining components.
std::vector<int> bfs_order(const Graph& F, int first) {
    int k = F.vertex_count();
    std::vector<int> order;
    std::vector<char> seen(k, 0);
    for (int i = 0; i <= k; ++i) {
        int start = i == 0 ? first : i - 1;
        if (seen[start]) continue;
        seen[start] = 1;
        order.push_back(start);
        for (std::size_t j = order.size() - 1; j < order.size(); ++j)
            for (int w : F.neighbors(order[j]))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
    }
    return order;
}

}  // namespace

std::optional<std::vector<int>> find_embedding(const Graph& F, const Graph& host, const std::vector<char>& allowed,
                                               int anchor) {
    int k = F.vertex_count(), n = host.vertex_count();
    if (k == 0) return std::vector<int>{};
    if (k > n) return std::nullopt;

    std::vector<int> order;
    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);

    auto fits = [&](int x, int h) {
        if (!allowed[h] || used[h]) return false;
        for (int w : F.neighbors(x))
            if (map[w] >= 0 && !host.adjacent(map[w], h)) return false;
        return true;
    };
    auto rec = [&](auto& self, int idx) -> bool {
        if (idx == k) return true;
        int x = order[idx];
        int pivot = -1;
        for (int w : F.neighbors(x))
            if (map[w] >= 0) {
                pivot = map[w];
                break;
            }
        auto attempt = [&](int h) {
            if (!fits(x, h)) return false;
            map[x] = h;
            used[h] = 1;
            if (self(self, idx + 1)) return true;
            used[h] = 0;
            map[x] = -1;
            return false;
        };
        if (pivot >= 0) {
            for (int h : host.neighbors(pivot))
                if (attempt(h)) return true;
        } else {
            for (int h = 0; h < n; ++h)
                if (attempt(h)) return true;
        }
        return false;
    };

    if (anchor < 0) {
        order = bfs_order(F, 0);
        if (rec(rec, 0)) return map;
        return std::nullopt;
    }
    if (!allowed[anchor]) return std::nullopt;
    for (int x = 0; x < k; ++x) {
        order = bfs_order(F, x);
        map[x] = anchor;
        used[anchor] = 1;
        if (rec(rec, 1)) return map;
        used[anchor] = 0;
        map[x] = -1;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> detect_mono(const Board& board, const Graph& F, int anchor) {
    int n = board.size();
    for (int c = 0; c < board.colors(); ++c) {
        if (anchor >= 0 && board.color(anchor) != c) continue;
        std::vector<char> allowed(n, 0);
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (board.color(v) == c) {
                allowed[v] = 1;
                ++count;
            }
        if (count < F.vertex_count()) continue;
        if (auto e = find_embedding(F, board.graph(), allowed, anchor)) return e;
    }
    return std::nullopt;
}

}  // namespace ovr

namespace ovr {

bool for_each_ordered_copy(const OrderedKey& key, const Graph& host, const std::vector<int>& colors, int color,
                           int anchor, const std::function<bool(const std::vector<int>&)>& visit) {
    int h = key.h, n = host.vertex_count();
    if (h == 0) return !visit({});
    if (h > n) return false;
    auto usable = [&](int v) { return v == anchor || colors[v] == color; };

    // Position 0 first, then BFS inside the class, then leftover positions.
    std::vector<int> order;
    std::vector<char> seen(h, 0);
    for (int start = 0; start < h; ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        order.push_back(start);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i)
            for (int b = 0; b < h; ++b)
                if (!seen[b] && key.has_edge(order[i], b)) {
                    seen[b] = 1;
                    order.push_back(b);
                }
    }

    std::vector<int> map(h, -1);
    std::vector<char> used(n, 0);
    bool stopped = false;

    auto rec = [&](auto& self, int idx) -> void {
        if (stopped) return;
        if (idx == h) {
            if (!visit(map)) stopped = true;
            return;
        }
        int p = order[idx];
        // Younger positions (< p) hold larger indices.
        int hi = n, lo = -1;
        for (int q = 0; q < h; ++q) {
            if (map[q] < 0) continue;
            if (q < p) hi = std::min(hi, map[q]);
            else lo = std::max(lo, map[q]);
        }
        int pivot = -1;
        for (int q = 0; q < h && pivot < 0; ++q)
            if (map[q] >= 0 && key.has_edge(p, q)) pivot = map[q];
        auto attempt = [&](int v) {
            if (v <= lo || v >= hi || used[v] || !usable(v)) return;
            if (anchor >= 0 && v == anchor && p != 0) return;
            for (int q = 0; q < h; ++q)
                if (map[q] >= 0 && key.has_edge(p, q) && !host.adjacent(map[q], v)) return;
            map[p] = v;
            used[v] = 1;
            self(self, idx + 1);
            used[v] = 0;
            map[p] = -1;
        };
        if (p == 0 && anchor >= 0) {
            attempt(anchor);
        } else if (pivot >= 0) {
            for (int v : host.neighbors(pivot)) {
                attempt(v);
                if (stopped) return;
            }
        } else {
            for (int v = hi - 1; v > lo; --v) {
                attempt(v);
                if (stopped) return;
            }
        }
    };
    rec(rec, 0);
    return stopped;
}

bool has_ordered_copy(const OrderedKey& key, const Graph& host, const std::vector<int>& colors, int color,
                      int anchor) {
    return for_each_ordered_copy(key, host, colors, color, anchor, [](const std::vector<int>&) { return false; });
}

}  // namespace ovr
