#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the Graph container and exact rationals, and only scale to
// tiny inputs.

#include <cstdint>
#include <vector>

#include "ovr/graph.hpp"
#include "ovr/rational.hpp"

namespace oracle {

// max over nonempty vertex sets of e/v.
ovr::Rational max_density(const ovr::Graph& g);
// max over vertex sets with >= 2 vertices of e/(v-1).
ovr::Rational max_m1(const ovr::Graph& g);
// min over nonempty vertex sets containing `forced` of v - e*theta.
ovr::Rational min_mu(const ovr::Graph& g, const ovr::Rational& theta, const std::vector<int>& forced = {});
// Some injective map F -> host inside `allowed` (using `anchor` if >= 0)
// carries edges to edges.
bool contains(const ovr::Graph& F, const ovr::Graph& host, const std::vector<char>& allowed, int anchor = -1);
// Every r-coloring of g has a monochromatic copy of F.
bool vertex_ramsey(const ovr::Graph& g, const ovr::Graph& F, int r);
// Ordered copies: h-sets of usable vertices, taken in decreasing index
// order, whose key edges are present. `anchor` must be the largest.
std::size_t ordered_copies(const ovr::OrderedKey& key, const ovr::Graph& host, const std::vector<int>& colors,
                           int color, int anchor = -1);
// Plain minimax over labelled boards, density restriction e/v <= d.
bool builder_wins(const ovr::Graph& F, int r, const ovr::Rational& d, int max_steps);
// All reduced p/q in (lo, hi) with q <= max_den, ascending.
std::vector<ovr::Rational> rationals_between(const ovr::Rational& lo, const ovr::Rational& hi, long max_den);

}  // namespace oracle
