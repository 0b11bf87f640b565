#include "ovr/random_process.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <random>
#include <thread>

#include <boost/math/distributions/beta.hpp>

namespace ovr {

EdgeProbability EdgeProbability::from_exponent(int n, double gamma) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!std::isfinite(gamma) || gamma < 0) throw std::invalid_argument("probability exponent must be finite and >= 0");
    EdgeProbability e;
    e.exponent = gamma;
    e.p = std::pow(static_cast<double>(n), -gamma);
    return e;
}

EdgeProbability EdgeProbability::from_value(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
    EdgeProbability e;
    e.p = p;
    return e;
}

PainterFactory paint_factory(const PriorityList& list) {
    return [list](std::uint64_t) { return paint_painter(list); };
}

PainterFactory greedy_factory(const Graph& F, int r) {
    return [F, r](std::uint64_t) { return greedy_painter(F, r); };
}

PainterFactory random_factory() {
    return [](std::uint64_t seed) { return random_painter(seed); };
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t trial, std::uint64_t vertex) {
    return splitmix(splitmix(splitmix(seed) ^ trial) ^ vertex);
}

TrialResult run_trial(const ProcessConfig& cfg, std::uint64_t trial, const AbstractPainter& painter) {
    double p = cfg.p.p;
    if (cfg.n < 1) throw std::invalid_argument("n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
    TrialResult res;
    res.board = Board(cfg.r);
    double log_q = p < 1.0 ? std::log1p(-p) : 0.0;
    for (int v = 0; v < cfg.n; ++v) {
        Move move;
        if (p >= 1.0) {
            for (int u = 0; u < v; ++u) move.neighbors.push_back(u);
        } else if (p > 0.0) {
            // Geometric skips over the earlier vertices.
            std::mt19937_64 g(stream_key(cfg.seed, trial, static_cast<std::uint64_t>(v)));
            double u = -1.0;
            for (;;) {
                double skip = std::floor(std::log1p(-unit(g)) / log_q);
                u += 1.0 + skip;
                if (u >= v) break;
                move.neighbors.push_back(static_cast<int>(u));
            }
        }
        res.board.present(move);
        int c = painter(res.board);
        if (c < 0 || c >= cfg.r) throw std::invalid_argument("painter returned an invalid color");
        res.board.paint(c);
        res.vertices = v + 1;
        if (detect_mono(res.board, cfg.F, v)) {
            res.survived = false;
            break;
        }
    }
    return res;
}

SweepResult sweep(const Graph& F, int r, int n, const std::vector<EdgeProbability>& ps, int trials, std::uint64_t seed,
                  const PainterFactory& painter, int jobs) {
    if (trials < 1) throw std::invalid_argument("at least one trial is required");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
    std::vector<std::size_t> order(ps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ps[a].p < ps[b].p; });

    SweepResult out;
    for (std::size_t row = 0; row < order.size(); ++row) {
        const EdgeProbability& prob = ps[order[row]];
        ProcessConfig cfg;
        cfg.n = n;
        cfg.p = prob;
        cfg.F = F;
        cfg.r = r;
        // The sub-seed depends on the probability itself, not on its position.
        std::uint64_t bits;
        static_assert(sizeof bits == sizeof prob.p);
        std::memcpy(&bits, &prob.p, sizeof bits);
        cfg.seed = splitmix(seed ^ splitmix(bits));
        cfg.trials = trials;

        std::vector<char> survived(trials, 0);
        auto work = [&](int worker) {
            for (int t = worker; t < trials; t += jobs) {
                AbstractPainter paint = painter(stream_key(cfg.seed, static_cast<std::uint64_t>(t), ~0ULL));
                survived[t] = run_trial(cfg, static_cast<std::uint64_t>(t), paint).survived;
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }
        SweepRow r_out;
        r_out.n = n;
        r_out.exponent = prob.exponent;
        r_out.p = prob.p;
        r_out.trials = trials;
        r_out.survivals = static_cast<int>(std::count(survived.begin(), survived.end(), 1));
        out.rows.push_back(r_out);
    }
    return out;
}

double estimate_crossover(const SweepResult& sweep) {
    const auto& rows = sweep.rows;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        double a = rows[i].rate(), b = rows[i + 1].rate();
        if (a >= 0.5 && b < 0.5) {
            if (rows[i].p <= 0.0) throw NotBracketed("crossover needs positive probabilities");
            double la = std::log(rows[i].p), lb = std::log(rows[i + 1].p);
            double lp = a == b ? la : la + (a - 0.5) / (a - b) * (lb - la);
            return -lp / std::log(static_cast<double>(rows[i].n));
        }
    }
    throw NotBracketed("not bracketed: survival rate never crosses 1/2 in the sweep");
}

std::pair<double, double> binomial_interval(int k, int t, double confidence) {
    if (t < 1 || k < 0 || k > t) throw std::invalid_argument("need 0 <= k <= t and t >= 1");
    double alpha = 1.0 - confidence;
    double lo = 0.0, hi = 1.0;
    if (k > 0) lo = boost::math::quantile(boost::math::beta_distribution<double>(k, t - k + 1), alpha / 2);
    if (k < t) hi = boost::math::quantile(boost::math::beta_distribution<double>(k + 1, t - k), 1 - alpha / 2);
    return {lo, hi};
}

void write_csv(std::ostream& out, const SweepResult& sweep) {
    out << "n,p_exponent,p,trials,survivals,rate\n";
    for (const auto& row : sweep.rows) {
        out << row.n << ',';
        if (row.exponent) out << std::setprecision(6) << *row.exponent;
        out << ',' << std::setprecision(10) << row.p << ',' << row.trials << ',' << row.survivals << ','
            << std::setprecision(6) << row.rate() << '\n';
    }
}

void write_points(std::ostream& out, const SweepResult& sweep) {
    for (const auto& row : sweep.rows) {
        if (row.p <= 0.0) continue;
        out << std::setprecision(8) << std::log10(row.p) << ' ' << std::setprecision(6) << row.rate() << '\n';
    }
}

void write_interval_notes(std::ostream& out, const SweepResult& sweep) {
    for (const auto& row : sweep.rows) {
        auto [lo, hi] = binomial_interval(row.survivals, row.trials, 0.99);
        out << "# p=" << std::setprecision(6) << row.p << " survivals " << row.survivals << "/" << row.trials
            << " 99% exact interval [" << lo << ", " << hi << "]\n";
    }
}

}  // namespace ovr
