#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace oracle {

using ovr::Graph;
using ovr::Rational;

namespace {

int edges_inside(const Graph& g, std::uint32_t mask) {
    int e = 0;
    for (auto [u, v] : g.edges())
        if ((mask >> u & 1) && (mask >> v & 1)) ++e;
    return e;
}

void need_small(const Graph& g, int limit) {
    if (g.vertex_count() > limit) throw std::invalid_argument("oracle input too large");
}

}  // namespace

Rational max_density(const Graph& g) {
    need_small(g, 20);
    Rational best(0);
    for (std::uint32_t m = 1; m < (1u << g.vertex_count()); ++m) {
        Rational x(edges_inside(g, m), std::popcount(m));
        x.canonicalize();
        best = std::max(best, x);
    }
    return best;
}

Rational max_m1(const Graph& g) {
    need_small(g, 20);
    Rational best(0);
    for (std::uint32_t m = 1; m < (1u << g.vertex_count()); ++m) {
        int v = std::popcount(m);
        if (v < 2) continue;
        Rational x(edges_inside(g, m), v - 1);
        x.canonicalize();
        best = std::max(best, x);
    }
    return best;
}

Rational min_mu(const Graph& g, const Rational& theta, const std::vector<int>& forced) {
    need_small(g, 20);
    std::uint32_t need = 0;
    for (int v : forced) need |= 1u << v;
    bool any = false;
    Rational best;
    for (std::uint32_t m = 1; m < (1u << g.vertex_count()); ++m) {
        if ((m & need) != need) continue;
        Rational x = Rational(std::popcount(m)) - Rational(edges_inside(g, m)) * theta;
        if (!any || x < best) best = x;
        any = true;
    }
    return best;
}

bool contains(const Graph& F, const Graph& host, const std::vector<char>& allowed, int anchor) {
    int k = F.vertex_count(), n = host.vertex_count();
    if (k > n) return false;
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
        if (allowed[v]) pool.push_back(v);
    if (static_cast<int>(pool.size()) < k) return false;
    // Every k-subset of the pool in every order.
    std::vector<char> pick(pool.size(), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    do {
        std::vector<int> image;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (pick[i]) image.push_back(pool[i]);
        if (anchor >= 0 && std::find(image.begin(), image.end(), anchor) == image.end()) continue;
        do {
            bool ok = true;
            for (auto [a, b] : F.edges())
                if (!host.adjacent(image[a], image[b])) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        } while (std::next_permutation(image.begin(), image.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

bool vertex_ramsey(const Graph& g, const Graph& F, int r) {
    int n = g.vertex_count();
    need_small(g, 12);
    std::vector<int> color(n, 0);
    for (;;) {
        bool mono = false;
        for (int c = 0; c < r && !mono; ++c) {
            std::vector<char> allowed(n);
            for (int v = 0; v < n; ++v) allowed[v] = color[v] == c;
            mono = contains(F, g, allowed);
        }
        if (!mono) return false;
        int i = 0;
        while (i < n && ++color[i] == r) color[i++] = 0;
        if (i == n) return true;
    }
}

std::size_t ordered_copies(const ovr::OrderedKey& key, const Graph& host, const std::vector<int>& colors, int color,
                           int anchor) {
    int n = host.vertex_count(), h = key.h;
    std::size_t count = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (std::popcount(m) != h) continue;
        std::vector<int> chosen;
        for (int v = n - 1; v >= 0; --v)
            if (m >> v & 1) chosen.push_back(v);
        bool ok = true;
        for (int p = 0; p < h && ok; ++p) {
            int v = chosen[p];
            if (anchor >= 0) ok = p == 0 ? v == anchor : colors[v] == color && v != anchor;
            else ok = colors[v] == color;
        }
        for (int a = 0; a < h && ok; ++a)
            for (int b = a + 1; b < h && ok; ++b)
                if (key.has_edge(a, b) && !host.adjacent(chosen[a], chosen[b])) ok = false;
        if (ok) ++count;
    }
    return count;
}

namespace {

struct Minimax {
    const Graph& F;
    int r;
    Rational d;
    int max_steps;

    bool mono_through(const Graph& g, const std::vector<int>& colors, int v) const {
        std::vector<char> allowed(g.vertex_count());
        for (int u = 0; u < g.vertex_count(); ++u) allowed[u] = colors[u] == colors[v];
        return contains(F, g, allowed, v);
    }

    bool builder(const Graph& g, const std::vector<int>& colors) const {
        int n = g.vertex_count();
        if (n >= max_steps) return false;
        for (std::uint32_t nb = 0; nb < (1u << n); ++nb) {
            Graph next = g;
            int v = next.add_vertex();
            for (int u = 0; u < n; ++u)
                if (nb >> u & 1) next.add_edge(u, v);
            if (max_density(next) > d) continue;
            bool all_lose = true;
            for (int c = 0; c < r && all_lose; ++c) {
                std::vector<int> col = colors;
                col.push_back(c);
                if (!mono_through(next, col, v) && !builder(next, col)) all_lose = false;
            }
            if (all_lose) return true;
        }
        return false;
    }
};

}  // namespace

bool builder_wins(const Graph& F, int r, const Rational& d, int max_steps) {
    if (max_steps > 7) throw std::invalid_argument("oracle game too large");
    Minimax mm{F, r, d, max_steps};
    return mm.builder(Graph(0), {});
}

std::vector<Rational> rationals_between(const Rational& lo, const Rational& hi, long max_den) {
    std::vector<Rational> out;
    for (long q = 1; q <= max_den; ++q) {
        mpz_class first = lo.get_num() * q / lo.get_den();
        for (mpz_class p = first; ovr::make_rational(p, mpz_class(q)) < hi; ++p) {
            if (std::gcd(p.get_si(), q) != 1) continue;
            Rational x = ovr::make_rational(p, mpz_class(q));
            if (x > lo) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
