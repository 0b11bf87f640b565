#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ovr/board.hpp"
#include "ovr/errors.hpp"

namespace ovr {

struct OracleStep {
    std::vector<int> neighbors;  // 0-based board vertices
    int color = -1;              // 0-based
};

struct OracleResult {
    bool builder_wins = false;
    // Builder's first winning move, or Builder's first move and Painter's
    // refutation, continued along the memoized optimal play.
    std::vector<OracleStep> principal_variation;
    std::size_t states = 0;
};

// Colored board up to isomorphism and permutation of colors. Colors are
// 0..r-1; r marks the pending vertex.
std::string canonical_colored_key(const Graph& g, const std::vector<int>& colors, int r);

// Builder wins iff it can force a monochromatic F with at most max_steps
// vertices presented; surviving max_steps counts as a Painter win.
OracleResult solve_game_exhaustive(const GameConfig& cfg, int max_steps, std::size_t state_budget = 5'000'000);

// Smallest candidate density e/v (v <= max_steps, 1 <= e <= v(v-1)/2) at
// which Builder wins within max_steps. Throws if no candidate works.
Rational min_winning_density(const Graph& F, int r, int max_steps, std::size_t state_budget = 5'000'000);

}  // namespace ovr
