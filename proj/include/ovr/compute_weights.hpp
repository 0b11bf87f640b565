#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovr/rational.hpp"
#include "ovr/subgraph_family.hpp"

namespace ovr {

// Thrown when a property that must hold on every correct run fails.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class CwVariant {
    Full,        // forward sets and the secondary loop, run to completion
    Simplified,  // primary threats only; graphs with larger d are ignored
};

struct RoundTrace {
    int round = 0;                 // 1-based
    int sigma = 0;                 // 0-based color played this round
    std::vector<Scaled> d;         // d_s at the start of the round, per color
    Scaled w = 0;                  // weight given to primary threats
    std::vector<std::vector<int>> primary;                 // C^{i,j}, j = 1..
    std::vector<std::vector<std::vector<int>>> secondary;  // C^{i,j,k}
    bool full_entered = false;     // an ordering of F entered some C^{i,j}
};

// Per-color part of the live state.
struct ColorState {
    std::vector<char> in;          // membership in H_s
    std::vector<Scaled> w;         // w_s, valid where in[] is set
    std::vector<Scaled> d;         // d-value of a node whose parent is in H_s
    std::vector<char> ignored;     // simplified variant: subtree skipped
    int count = 0;
    // C_s(d): first primary batch of the round whose d_s was the key.
    std::map<Scaled, std::vector<int>> forward;
    struct Played {
        int round;
        Scaled d;
        Scaled w;
    };
    std::vector<Played> played;    // rounds in which this color was chosen
};

// Live state of the weight computation for fixed F, r, theta.
class CwRun {
public:
    CwRun(const SubgraphFamily& family, int r, const Rational& theta, CwVariant variant,
          bool check_invariants = false);

    const SubgraphFamily& family() const { return *family_; }
    int colors() const { return r_; }
    const ThetaScale& scale() const { return scale_; }
    CwVariant variant() const { return variant_; }
    int rounds() const { return round_; }
    const ColorState& color(int s) const { return colors_[s]; }

    // d_s for the next round, per color.
    std::vector<Scaled> current_d() const;
    // One iteration of the outer loop with sigma = color played.
    RoundTrace play_round(int sigma);
    // Some H_s equals the whole family.
    bool terminated() const;
    // 1 + sum_s d_s at the first round where an ordering of F entered a
    // primary batch (scaled by q).
    std::optional<Scaled> completion_value() const { return completion_; }
    int completion_round() const { return completion_round_; }

    bool in_family(int s, int node) const { return colors_[s].in[node] != 0; }
    Scaled weight(int s, int node) const { return colors_[s].w[node]; }
    // Vertex weights of `node` in color s, by position; kScaledNegInf where
    // the ancestor is missing from H_s.
    std::vector<Scaled> weight_vector(int node, int s) const;
    // lambda(H, w_{(H,pi,s)}) scaled; kScaledNegInf if some weight is.
    Scaled lambda_of(int node, int s) const;
    // min over subgraphs J of the node (order restricted) of lambda_of(J, s).
    Scaled lambda_min_over_subgraphs(int node, int s) const;
    // Triple min/max/min value on the current state: max over s and orderings
    // of F of lambda_min_over_subgraphs.
    Scaled max_min_lambda() const;

    // Canonical encoding of everything that influences future rounds.
    std::string memo_key() const;
    // Final checks on a terminated full run (closure, weights, subgraph
    // monotonicity). Throws InvariantViolation.
    void check_final_invariants() const;

    // `i sigma d_1 .. d_r w |C^{i,*}| |C^{i,*,*}|` with 1-based sigma.
    std::string format_trace(const RoundTrace& t) const;

private:
    Scaled compute_d(int s, int node) const;
    void add_member(int s, int node, Scaled w);
    std::vector<int> children_of(int s) const;
    bool forward_hit(int s, int node, Scaled key) const;
    void fail(const std::string& what) const;
    void check_pending_sandwich(int s, Scaled next_d);

    const SubgraphFamily* family_;
    int r_;
    ThetaScale scale_;
    CwVariant variant_;
    bool check_;
    int round_ = 0;
    std::vector<ColorState> colors_;
    std::optional<Scaled> completion_;
    int completion_round_ = 0;
    std::vector<Scaled> last_d_;
    int last_sigma_ = -1;
    struct Sandwich {
        int node;
        int played_index;
        bool lower;
        Scaled D;
    };
    std::vector<std::vector<Sandwich>> pending_sandwich_;
    std::vector<std::string> trace_log_;
};

// Weight computation run to termination on the given sequence (0-based colors).
// Throws if the sequence is exhausted first.
struct CwResult {
    CwRun state;
    std::vector<RoundTrace> traces;
};
CwResult cw_full(const SubgraphFamily& family, int r, const Rational& theta, const std::vector<int>& alpha,
                 bool check_invariants = true);

// Simplified variant stopped at the first completion of F.
CwResult cw_simplified(const SubgraphFamily& family, int r, const Rational& theta, const std::vector<int>& alpha,
                       bool check_invariants = false);

}  // namespace ovr
