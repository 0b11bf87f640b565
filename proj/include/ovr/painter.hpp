#pragma once

#include <istream>
#include <string>
#include <vector>

#include "ovr/board.hpp"
#include "ovr/compute_weights.hpp"

namespace ovr {

struct PriorityEntry {
    OrderedKey key;
    int color = 0;        // 0-based
    ExtRational lambda;   // smaller is more dangerous; -inf: never created
    bool flagged = false; // member of the tie-breaking family of its color
};

// Total order: ascending lambda, flagged before unflagged, then color, then
// key. Entries for every (class, color) pair.
class PriorityList {
public:
    PriorityList() = default;
    PriorityList(int colors, std::vector<PriorityEntry> entries);

    int colors() const { return r_; }
    const std::vector<PriorityEntry>& entries() const { return entries_; }
    // Indices into entries(), in rank order, for one color.
    const std::vector<int>& of_color(int s) const { return by_color_[s]; }
    // Entry for (key, color), or nullptr.
    const PriorityEntry* find(const OrderedKey& key, int color) const;

    // `rank  color  lambda=p/q  flag=0|1  graph=<h;a-b,...>`, 1-based rank
    // and color, '#' lines are comments.
    std::string to_text() const;
    static PriorityList from_text(std::istream& in);

private:
    int r_ = 0;
    std::vector<PriorityEntry> entries_;
    std::vector<std::vector<int>> by_color_;
};

struct PaintStrategy {
    Rational theta;
    std::vector<int> alpha;                    // padded sequence used for the run
    PriorityList list;
    std::vector<std::vector<int>> tie_family;  // per color, node ids
    Rational value;                            // max over s, orderings of min lambda; <= 0 expected at the root
};

// Runs the full weight computation on alpha (padded to r*|S(F)|) and builds
// the priority list and tie-breaking families.
PaintStrategy derive_priority_list(const Graph& F, int r, const Rational& theta, const std::vector<int>& alpha);

// Searches the branching evaluation with the full variant for the sequence
// and then derives the strategy.
PaintStrategy derive_paint_strategy(const Graph& F, int r, const Rational& theta);

struct PaintDecision {
    int color = 0;
    std::vector<ExtRational> d;    // per color: lambda of the most dangerous class created
    std::vector<char> flag;        // that class is in the color's tie family
    std::vector<int> tied;         // colors attaining the maximum
    bool tie_well_formed = true;   // no tie, or two colors with exactly one flagged
};

// Color for the pending (newest) vertex of the board.
PaintDecision paint_decide(const Board& board, const PriorityList& list);

// Highest color c whose class H[c] would not get a copy through the pending
// vertex, else color 0. H has one graph per color.
int greedy_decide(const Board& board, const std::vector<Graph>& H);

struct WitnessConstants {
    Rational epsilon;
    mpz_class exponent;  // r^exponent * v(F) + 1
    mpz_class vmax;
};

WitnessConstants compute_witness_constants(const CwRun& state);

struct WitnessReport {
    bool ok = true;
    bool negative_subgraph = false;  // some subgraph has mu < 0
    std::size_t copies_checked = 0;
    std::string detail;
};

// For every copy of a listed class in its color, the best superset H' on the
// board (exact, by closure) must satisfy mu_theta(H') <= lambda, unless the
// board contains a subgraph with mu_theta < 0. Boards up to 64 vertices.
WitnessReport check_witness_invariant(const Board& board, const PriorityList& list, const Rational& theta,
                                      const mpz_class& vmax);

}  // namespace ovr
