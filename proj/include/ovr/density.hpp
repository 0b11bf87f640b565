#pragma once

#include <string>
#include <vector>

#include "ovr/big_lambda.hpp"
#include "ovr/graph.hpp"

namespace ovr {

struct SearchStep {
    Rational theta;
    Rational lambda;
};

struct DensityResult {
    Rational theta_star;
    Rational m1_star;
    std::vector<int> alpha_star;     // 0-based colors
    std::vector<SearchStep> log;     // every evaluated theta, in evaluation order
};

struct DensityOptions {
    long max_denominator = 64;
    bool induced_only = false;
    int jobs = 1;
    CwVariant variant = CwVariant::Simplified;
};

// Root not located below the denominator cap; carries the final bracket.
class RootNotFound : public std::runtime_error {
public:
    RootNotFound(const Rational& lo, const Rational& hi, long cap);
    Rational lo, hi;
};

// Sign-driven search for the unique zero of Lambda on (0, 2): binary search
// over the ascending list of rationals with bounded denominator inside the
// current bracket, doubling the bound until an exact zero is found.
DensityResult online_vertex_ramsey_density(const Graph& F, int r, const DensityOptions& options = {});

// max over subgraphs with >= 2 vertices of e/(v-1).
Rational m1(const Graph& F);
// r = 1: max e/v; r >= 2: max (e + m1_bar(r-1))/v.
Rational m1_bar(const Graph& F, int r);
// k with m1_star = (k-1)/k for forests.
long k_star_from_density(const Graph& F, const Rational& m1_star);

// Reduced rationals in the open interval (lo, hi) with denominator <= max_den,
// ascending, by Stern-Brocot descent.
std::vector<Rational> rationals_in_interval(const Rational& lo, const Rational& hi, long max_den);

}  // namespace ovr
