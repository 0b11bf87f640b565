#pragma once

#include <cstddef>
#include <vector>

#include "ovr/compute_weights.hpp"
#include "ovr/errors.hpp"

namespace ovr {

struct LambdaOutcome {
    Rational value;
    std::vector<int> alpha;    // 0-based colors, lexicographically smallest minimizer
    std::size_t states = 0;    // distinct memoized states visited
};

struct LambdaOptions {
    CwVariant variant = CwVariant::Simplified;
    bool check_invariants = false;
    int jobs = 1;              // root branches evaluated concurrently
    std::size_t state_budget = 20'000'000;  // per solver, about 70 bytes each; ResourceLimit beyond
};

// Minimum over Painter color sequences of the completion value
// 1 + sum_s d_s, branching on the color at every round.
LambdaOutcome big_lambda(const SubgraphFamily& family, int r, const Rational& theta,
                         const LambdaOptions& options = {});

// Sequence padded with color 0 to the length r * |S(F)| the full run accepts.
std::vector<int> pad_sequence(std::vector<int> alpha, int r, int family_size);

}  // namespace ovr
