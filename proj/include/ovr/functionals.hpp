#pragma once

#include <vector>

#include "ovr/graph.hpp"
#include "ovr/rational.hpp"

namespace ovr {

// v(H) - e(H) * theta.
Rational mu_theta(const Graph& H, const Rational& theta);

// sum over u of (1 + w(u)) - e(H) * theta; negative infinity if any weight is.
// `w` is indexed by vertex and may be longer than v(H).
ExtRational lambda_theta(const Graph& H, const std::vector<ExtRational>& w, const Rational& theta);

// Minimum over vertex sets J containing v (induced edges) of
// sum_{u in J - v} (1 + w(u)) - e(J) * theta. Weights of vertices other than
// v must be finite. Always <= 0.
Rational d_theta(const Graph& H, int v, const std::vector<ExtRational>& w, const Rational& theta);

}  // namespace ovr
