#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "ovr/board.hpp"
#include "ovr/builder.hpp"

namespace ovr {

// Edge probability, either given directly or as p = n^-exponent.
struct EdgeProbability {
    std::optional<double> exponent;
    double p = 0.0;

    static EdgeProbability from_exponent(int n, double gamma);
    static EdgeProbability from_value(double p);
};

struct ProcessConfig {
    int n = 1;
    EdgeProbability p;
    Graph F;
    int r = 2;
    std::uint64_t seed = 0;
    int trials = 1;
};

// Builds a fresh painter for one trial (the argument is that trial's
// sub-seed); painters are never shared between threads.
using PainterFactory = std::function<AbstractPainter(std::uint64_t)>;

PainterFactory paint_factory(const PriorityList& list);
PainterFactory greedy_factory(const Graph& F, int r);
PainterFactory random_factory();

// Stateless 64-bit mix of (seed, trial, vertex); each arriving vertex gets
// its own generator stream.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t trial, std::uint64_t vertex);

struct TrialResult {
    bool survived = true;
    int vertices = 0;   // vertices played, including the one closing an F
    Board board{2};
};

// Vertices 1..n arrive with independent back-edges of probability p; the
// trial fails at the first monochromatic F through the new vertex.
TrialResult run_trial(const ProcessConfig& cfg, std::uint64_t trial, const AbstractPainter& painter);

struct SweepRow {
    int n = 0;
    std::optional<double> exponent;
    double p = 0.0;
    int trials = 0;
    int survivals = 0;
    double rate() const { return trials ? static_cast<double>(survivals) / trials : 0.0; }
};

struct SweepResult {
    std::vector<SweepRow> rows;   // p ascending
};

// One row per probability with `trials` independent trials each; `jobs`
// threads share the trials, results do not depend on it.
SweepResult sweep(const Graph& F, int r, int n, const std::vector<EdgeProbability>& ps, int trials, std::uint64_t seed,
                  const PainterFactory& painter, int jobs = 1);

class NotBracketed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exponent gamma where the survival rate crosses 1/2, by linear
// interpolation in log p between the first bracketing pair of rows.
double estimate_crossover(const SweepResult& sweep);

// Two-sided Clopper-Pearson interval for k successes in t trials.
std::pair<double, double> binomial_interval(int k, int t, double confidence);

// `n,p_exponent,p,trials,survivals,rate`
void write_csv(std::ostream& out, const SweepResult& sweep);
// `log10(p) rate` per row.
void write_points(std::ostream& out, const SweepResult& sweep);
// One `# ...` line per row with the 99% interval.
void write_interval_notes(std::ostream& out, const SweepResult& sweep);

}  // namespace ovr
