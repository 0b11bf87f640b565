// ovr: online vertex-Ramsey densities, strategies and simulations.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ovr/builder.hpp"
#include "ovr/density.hpp"
#include "ovr/oracle.hpp"
#include "ovr/painter.hpp"
#include "ovr/random_process.hpp"
#include "ovr/translation.hpp"

using namespace ovr;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;

// Flags shared by the graph-based commands.
struct GraphFlags {
    std::string graph;
    int colors = 2;
    void add(CLI::App* cmd) {
        cmd->add_option("--graph", graph, "edge-list file of F")->required();
        cmd->add_option("--colors", colors, "number of colors r")->required()->check(CLI::Range(1, 16));
    }
    Graph load() const {
        Graph F = read_graph_file(graph);
        if (F.edge_count() == 0) throw std::invalid_argument("F must have at least one edge");
        return F;
    }
};

std::string join_colors(const std::vector<int>& alpha) {
    std::string s;
    for (int c : alpha) s += (s.empty() ? "" : " ") + std::to_string(c + 1);
    return s;
}

Restriction restriction_from(const std::string& density, const std::string& theta, const std::string& beta) {
    if (!density.empty()) {
        if (!theta.empty() || !beta.empty()) throw std::invalid_argument("--density excludes --theta/--beta");
        Rational d = parse_rational(density);
        if (sgn(d) <= 0) throw std::invalid_argument("--density must be positive");
        return Restriction::density(d);
    }
    if (theta.empty() || beta.empty()) throw std::invalid_argument("give --density p/q or both --theta and --beta");
    Rational t = parse_rational(theta);
    if (sgn(t) <= 0) throw std::invalid_argument("--theta must be positive");
    return Restriction::generalized(t, parse_rational(beta));
}

// Every density threshold of the restriction at or below theta, with beta <= 0.
bool restriction_admits(const Restriction& R, const Rational& theta) {
    if (R.kind == Restriction::Kind::Density) return Rational(1) / R.d <= theta;
    return R.theta <= theta && sgn(R.beta) <= 0;
}

std::vector<int> parse_move_line(const std::string& line, int board_size) {
    std::istringstream in(line);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        if (tok == ".") continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw ParseError("bad vertex '" + tok + "' (expected 1-based indices or '.')");
        if (v < 1 || v > board_size) throw ParseError("vertex " + tok + " is not on the board");
        out.push_back(v - 1);
    }
    return out;
}

int run_density(const GraphFlags& g, long max_den, bool induced, int jobs, bool emit_alpha, bool log) {
    Graph F = g.load();
    DensityOptions opt;
    opt.max_denominator = max_den;
    opt.induced_only = induced;
    opt.jobs = jobs;
    DensityResult res = online_vertex_ramsey_density(F, g.colors, opt);
    std::cout << "m1_star = " << format_rational(res.m1_star) << "  (theta_star = " << format_rational(res.theta_star)
              << ")\n";
    if (F.is_forest()) std::cout << "k_star = " << k_star_from_density(F, res.m1_star) << "\n";
    if (emit_alpha) std::cout << "alpha = " << join_colors(res.alpha_star) << "\n";
    if (log)
        for (const auto& s : res.log)
            std::cout << "theta = " << format_rational(s.theta) << "  lambda = " << format_rational(s.lambda) << "\n";
    return 0;
}

int run_lambda(const GraphFlags& g, const std::string& theta, const std::string& variant, int jobs) {
    Graph F = g.load();
    Rational t = parse_rational(theta);
    if (sgn(t) <= 0) throw std::invalid_argument("--theta must be positive");
    LambdaOptions opt;
    opt.variant = variant == "full" ? CwVariant::Full : CwVariant::Simplified;
    opt.jobs = jobs;
    LambdaOutcome o = big_lambda(SubgraphFamily::enumerate(F), g.colors, t, opt);
    std::cout << "lambda = " << format_rational(o.value) << "\n";
    std::cout << "alpha = " << join_colors(o.alpha) << "\n";
    return 0;
}

int run_strategy(const GraphFlags& g, const std::string& theta, const std::string& out) {
    Graph F = g.load();
    Rational t = theta.empty() ? online_vertex_ramsey_density(F, g.colors).theta_star : parse_rational(theta);
    PaintStrategy st = derive_paint_strategy(F, g.colors, t);
    std::ofstream file(out);
    if (!file) throw std::invalid_argument("cannot write '" + out + "'");
    file << "# theta " << format_rational(t) << "\n" << st.list.to_text();
    std::cout << "wrote " << st.list.entries().size() << " entries to " << out << "  (theta = " << format_rational(t)
              << ", value = " << format_rational(st.value) << ")\n";
    return 0;
}

int play_as_painter(const Graph& F, int r, const Restriction& R, const std::string& list_file, bool interactive) {
    PriorityList list;
    if (!list_file.empty()) {
        std::ifstream in(list_file);
        if (!in) throw std::invalid_argument("cannot open priority list '" + list_file + "'");
        list = PriorityList::from_text(in);
        if (list.colors() != r) throw std::invalid_argument("priority list has a different number of colors");
    } else {
        list = derive_paint_strategy(F, r, online_vertex_ramsey_density(F, r).theta_star).list;
    }
    Board board(r);
    std::string line;
    for (int t = 1;; ++t) {
        if (interactive) std::cout << "vertex " << t << " neighbors (1-based, '.' for none)> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (!line.empty() && line[0] == '#') {
            --t;
            continue;
        }
        Move move{parse_move_line(line, board.size())};
        if (!legal(board, move, R)) {
            std::cerr << "illegal move at step " << t << ": violates " << R.describe() << "\n";
            return kExitValidation;
        }
        board.present(move);
        PaintDecision d = paint_decide(board, list);
        board.paint(d.color);
        if (interactive)
            std::cout << "painted vertex " << t << " with color " << d.color + 1 << "\n";
        else
            std::cout << "step " << t << " color " << d.color + 1 << "\n";
        if (detect_mono(board, F, board.size() - 1)) {
            std::cout << "winner: builder  (monochromatic F after " << t << " vertices)\n";
            return 0;
        }
    }
    std::cout << "winner: painter  (no monochromatic F after " << board.size() << " vertices)\n";
    return 0;
}

int play_as_builder(const Graph& F, int r, const Restriction& R, const std::string& opponent, std::uint64_t seed,
                    int max_depth, bool interactive) {
    if (r < 2) throw std::invalid_argument("builder play needs at least two colors");
    Rational theta = online_vertex_ramsey_density(F, r).theta_star;
    if (!restriction_admits(R, theta))
        throw std::invalid_argument("restriction " + R.describe() +
                                    " is below the online threshold; the builder strategy needs density >= " +
                                    format_rational(Rational(1) / theta));
    AbstractTree tree = build_abstract_tree(F, r, theta, max_depth);

    AbstractPainter other;
    if (opponent == "paint")
        other = paint_painter(derive_paint_strategy(F, r, theta).list);
    else if (opponent == "greedy")
        other = greedy_painter(F, r);
    else if (opponent == "random")
        other = random_painter(seed);
    long t = 0;
    // Wraps the opponent: announces the move, then asks for or computes the color.
    AbstractPainter painter = [&](const Board& b) {
        ++t;
        int v = b.size() - 1;
        std::string attach, edges;
        for (int u : b.graph().neighbors(v)) {
            attach += (attach.empty() ? "" : ",") + std::to_string(u + 1);
            edges += (edges.empty() ? "" : ",") + std::to_string(u + 1) + "-" + std::to_string(v + 1);
        }
        if (attach.empty()) attach = edges = "-";
        if (interactive)
            std::cout << "vertex " << v + 1 << " arrives adjacent to " << attach << "\n";
        else
            std::cout << "step " << t << " attach " << attach << " edges " << edges << "\n";
        int c = -1;
        if (other) {
            c = other(b);
        } else {
            for (;;) {
                if (interactive) std::cout << "color (1.." << r << ")> " << std::flush;
                std::string tok;
                if (!(std::cin >> tok)) throw std::invalid_argument("input ended before the game did");
                try {
                    c = std::stoi(tok) - 1;
                } catch (const std::exception&) {
                    c = -1;
                }
                if (c >= 0 && c < r) break;
                if (!interactive) throw ParseError("bad color '" + tok + "'");
                std::cout << "enter a color between 1 and " << r << "\n";
            }
        }
        if (!interactive && other) std::cout << "color " << c + 1 << "\n";
        return c;
    };
    ConcreteOutcome o = play_concrete(tree, F, theta, painter);
    if (!o.legal) std::cerr << "warning: final board violates " << R.describe() << "\n";
    std::cout << "winner: " << (o.mono_found ? "builder" : "painter") << "  (" << o.steps << " vertices)\n";
    return o.mono_found ? 0 : 1;
}

int run_oracle(const GraphFlags& g, const std::string& density, int max_steps, bool show_pv) {
    Graph F = g.load();
    GameConfig cfg{F, g.colors, restriction_from(density, "", "")};
    OracleResult res = solve_game_exhaustive(cfg, max_steps);
    std::cout << "winner: " << (res.builder_wins ? "builder" : "painter") << "\n";
    std::cout << "states: " << res.states << "\n";
    if (show_pv)
        for (std::size_t i = 0; i < res.principal_variation.size(); ++i) {
            const auto& s = res.principal_variation[i];
            std::cout << "pv " << i + 1 << " attach";
            if (s.neighbors.empty()) std::cout << " -";
            for (int u : s.neighbors) std::cout << ' ' << u + 1;
            if (s.color >= 0) std::cout << " color " << s.color + 1;
            std::cout << "\n";
        }
    return 0;
}

std::vector<double> parse_decimal_list(const std::string& text, const char* flag) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw ParseError(std::string("bad number '") + tok + "' in " + flag);
        out.push_back(x);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online vertex-Ramsey density toolkit"};
    app.require_subcommand(1);

    GraphFlags dflags, lflags, sflags, pflags, oflags, mflags;

    auto* density = app.add_subcommand("density", "exact online density m1* and threshold theta*");
    dflags.add(density);
    long max_den = 64;
    bool induced = false, emit_alpha = false, show_log = false;
    int djobs = 1;
    density->add_option("--max-den", max_den, "initial denominator cap of the search")->check(CLI::PositiveNumber);
    density->add_flag("--induced-opt", induced, "enumerate induced subgraphs only");
    density->add_option("--jobs", djobs, "worker threads")->check(CLI::PositiveNumber);
    density->add_flag("--emit-alpha", emit_alpha, "print the optimal color sequence");
    density->add_flag("--log", show_log, "print every evaluated theta");

    auto* lambda = app.add_subcommand("lambda", "evaluate the branching minimum at theta");
    lflags.add(lambda);
    std::string ltheta, variant = "simplified";
    int ljobs = 1;
    lambda->add_option("--theta", ltheta, "theta as p/q")->required();
    lambda->add_option("--variant", variant, "weight computation variant")
        ->check(CLI::IsMember({"simplified", "full"}));
    lambda->add_option("--jobs", ljobs, "worker threads")->check(CLI::PositiveNumber);

    auto* strategy = app.add_subcommand("strategy", "export the Painter priority list");
    sflags.add(strategy);
    std::string sout, stheta;
    strategy->add_option("--out", sout, "output file")->required();
    strategy->add_option("--theta", stheta, "theta as p/q (default: theta*)");

    auto* play = app.add_subcommand("play", "play the game against the computed strategy");
    pflags.add(play);
    std::string mode, pdensity, ptheta, pbeta, list_file, opponent = "stdin";
    bool interactive = false;
    std::uint64_t pseed = 1;
    int max_depth = 10;
    play->add_option("--mode", mode, "role of the program")->required()->check(CLI::IsMember({"builder", "painter"}));
    auto* od = play->add_option("--density", pdensity, "density restriction p/q");
    auto* ot = play->add_option("--theta", ptheta, "generalized restriction theta");
    auto* ob = play->add_option("--beta", pbeta, "generalized restriction beta");
    od->excludes(ot)->excludes(ob);
    play->add_option("--list", list_file, "priority list file for painter mode");
    play->add_option("--opponent", opponent, "painter opposing builder mode")
        ->check(CLI::IsMember({"stdin", "paint", "greedy", "random"}));
    play->add_option("--seed", pseed, "seed for the random opponent");
    play->add_option("--max-depth", max_depth, "depth cap of the builder strategy tree")->check(CLI::Range(1, 24));
    play->add_flag("--interactive", interactive, "prompt on the terminal");

    auto* oracle = app.add_subcommand("oracle", "exhaustive game solver for tiny instances");
    oflags.add(oracle);
    std::string odensity;
    int max_steps = 6;
    bool show_pv = false;
    oracle->add_option("--density", odensity, "density restriction p/q")->required();
    oracle->add_option("--max-steps", max_steps, "vertices Builder may present")->check(CLI::Range(1, 20));
    oracle->add_flag("--pv", show_pv, "print the principal variation");

    auto* simulate = app.add_subcommand("simulate", "random vertex-exposure process sweep");
    mflags.add(simulate);
    int n = 1000, trials = 100, mjobs = 1;
    std::string pexp, pval, painter_name = "paint", points, csv;
    std::uint64_t seed = 1;
    simulate->add_option("--n", n, "vertices per trial")->check(CLI::PositiveNumber);
    auto* oe = simulate->add_option("--p-exp", pexp, "comma-separated exponents g (p = n^-g)");
    auto* op = simulate->add_option("--p", pval, "comma-separated probabilities");
    oe->excludes(op);
    simulate->add_option("--trials", trials, "trials per probability")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "seed");
    simulate->add_option("--painter", painter_name, "painter")->check(CLI::IsMember({"paint", "greedy", "random"}));
    simulate->add_option("--jobs", mjobs, "worker threads")->check(CLI::PositiveNumber);
    simulate->add_option("--emit-points", points, "also write log10(p) rate pairs");
    simulate->add_option("--out", csv, "CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*density) return run_density(dflags, max_den, induced, djobs, emit_alpha, show_log);
        if (*lambda) return run_lambda(lflags, ltheta, variant, ljobs);
        if (*strategy) return run_strategy(sflags, stheta, sout);
        if (*play) {
            Graph F = pflags.load();
            Restriction R = restriction_from(pdensity, ptheta, pbeta);
            if (mode == "painter") return play_as_painter(F, pflags.colors, R, list_file, interactive);
            return play_as_builder(F, pflags.colors, R, opponent == "stdin" ? "" : opponent, pseed, max_depth,
                                   interactive);
        }
        if (*oracle) return run_oracle(oflags, odensity, max_steps, show_pv);
        if (*simulate) {
            Graph F = mflags.load();
            if (pexp.empty() == pval.empty()) throw std::invalid_argument("give exactly one of --p-exp and --p");
            std::vector<EdgeProbability> ps;
            if (!pexp.empty())
                for (double g : parse_decimal_list(pexp, "--p-exp")) ps.push_back(EdgeProbability::from_exponent(n, g));
            else
                for (double p : parse_decimal_list(pval, "--p")) ps.push_back(EdgeProbability::from_value(p));
            PainterFactory factory;
            if (painter_name == "paint") {
                if (mflags.colors < 2) throw std::invalid_argument("the paint strategy needs at least two colors");
                Rational theta = online_vertex_ramsey_density(F, mflags.colors).theta_star;
                factory = paint_factory(derive_paint_strategy(F, mflags.colors, theta).list);
            } else if (painter_name == "greedy") {
                factory = greedy_factory(F, mflags.colors);
            } else {
                factory = random_factory();
            }
            SweepResult res = sweep(F, mflags.colors, n, ps, trials, seed, factory, mjobs);
            if (csv.empty()) {
                write_csv(std::cout, res);
            } else {
                std::ofstream out(csv);
                if (!out) throw std::invalid_argument("cannot write '" + csv + "'");
                write_csv(out, res);
            }
            write_interval_notes(std::cerr, res);
            if (!points.empty()) {
                std::ofstream out(points);
                if (!out) throw std::invalid_argument("cannot write '" + points + "'");
                write_points(out, res);
            }
            return 0;
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "error: resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const RootNotFound& e) {
        std::cerr << "error: " << e.what() << " (raise --max-den)\n";
        return kExitResource;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
