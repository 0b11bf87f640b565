#include "ovr/density.hpp"

#include <algorithm>
#include <bit>

namespace ovr {

namespace {

int induced_edges(const Graph& g, std::uint32_t mask) {
    int e = 0;
    for (auto [u, v] : g.edges())
        if ((mask >> u & 1u) && (mask >> v & 1u)) ++e;
    return e;
}

void require_small(const Graph& g) {
    if (g.vertex_count() > 24) throw std::invalid_argument("graph too large for subset enumeration");
}

void stern_brocot(long a, long b, long c, long d, const Rational& lo, const Rational& hi, long max_den,
                  std::vector<Rational>& out) {
    long num = a + c, den = b + d;
    if (den > max_den) return;
    Rational m = make_rational(num, den);
    if (m > lo) stern_brocot(a, b, num, den, lo, hi, max_den, out);
    if (m > lo && m < hi) out.push_back(m);
    if (m < hi) stern_brocot(num, den, c, d, lo, hi, max_den, out);
}

}  // namespace

RootNotFound::RootNotFound(const Rational& lo_, const Rational& hi_, long cap)
    : std::runtime_error("root of Lambda lies in (" + format_rational(lo_) + ", " + format_rational(hi_) +
                         ") but has denominator above " + std::to_string(cap)),
      lo(lo_),
      hi(hi_) {}

std::vector<Rational> rationals_in_interval(const Rational& lo, const Rational& hi, long max_den) {
    std::vector<Rational> out;
    if (max_den < 1 || !(lo < hi)) return out;
    if (sgn(lo) < 0) throw std::invalid_argument("interval must lie in the positive reals");
    stern_brocot(0, 1, 1, 0, lo, hi, max_den, out);
    return out;
}

DensityResult online_vertex_ramsey_density(const Graph& F, int r, const DensityOptions& options) {
    if (r < 2) throw std::invalid_argument("at least two colors are required");
    if (F.edge_count() == 0) throw std::invalid_argument("F must have at least one edge");
    if (options.max_denominator < 1) throw std::invalid_argument("max denominator must be positive");

    SubgraphFamily family = SubgraphFamily::enumerate(F, options.induced_only);
    LambdaOptions lopt;
    lopt.variant = options.variant;
    lopt.jobs = options.jobs;

    DensityResult res;
    Rational lo(0), hi(2);
    auto evaluate = [&](const Rational& theta) {
        LambdaOutcome o = big_lambda(family, r, theta, lopt);
        res.log.push_back({theta, o.value});
        return o;
    };

    for (long cap = 1;; cap *= 2) {
        if (cap > options.max_denominator) cap = options.max_denominator;
        std::vector<Rational> cand = rationals_in_interval(lo, hi, cap);
        std::size_t a = 0, b = cand.size();
        while (a < b) {
            std::size_t mid = a + (b - a) / 2;
            LambdaOutcome o = evaluate(cand[mid]);
            int s = sgn(o.value);
            if (s == 0) {
                res.theta_star = cand[mid];
                res.m1_star = Rational(1) / cand[mid];
                res.alpha_star = std::move(o.alpha);
                return res;
            }
            if (s > 0) {
                lo = cand[mid];
                a = mid + 1;
            } else {
                hi = cand[mid];
                b = mid;
            }
        }
        if (cap >= options.max_denominator) throw RootNotFound(lo, hi, options.max_denominator);
    }
}

Rational m1(const Graph& F) {
    int n = F.vertex_count();
    if (n < 2) throw std::invalid_argument("m1 needs at least two vertices");
    require_small(F);
    Rational best(0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int v = std::popcount(mask);
        if (v < 2) continue;
        Rational x = make_rational(induced_edges(F, mask), v - 1);
        if (x > best) best = x;
    }
    return best;
}

Rational m1_bar(const Graph& F, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    int n = F.vertex_count();
    require_small(F);
    Rational prev(0);
    for (int level = 1; level <= r; ++level) {
        Rational best(0);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Rational x = (Rational(induced_edges(F, mask)) + prev) / Rational(std::popcount(mask));
            if (x > best) best = x;
        }
        prev = best;
    }
    return prev;
}

long k_star_from_density(const Graph& F, const Rational& m1_star) {
    if (!F.is_forest()) throw std::invalid_argument("k* is defined for forests only");
    Rational gap = Rational(1) - m1_star;
    if (sgn(gap) <= 0 || gap.get_num() != 1 || !gap.get_den().fits_slong_p())
        throw std::invalid_argument("density " + format_rational(m1_star) + " is not of the form (k-1)/k");
    return gap.get_den().get_si();
}

}  // namespace ovr
