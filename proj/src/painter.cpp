#include "ovr/painter.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "ovr/big_lambda.hpp"

namespace ovr {

namespace {

bool entry_less(const PriorityEntry& a, const PriorityEntry& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.flagged != b.flagged) return a.flagged;
    if (a.color != b.color) return a.color < b.color;
    return a.key < b.key;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

PriorityList::PriorityList(int colors, std::vector<PriorityEntry> entries) : r_(colors), entries_(std::move(entries)) {
    if (r_ < 1) throw std::invalid_argument("priority list needs at least one color");
    std::sort(entries_.begin(), entries_.end(), entry_less);
    by_color_.assign(r_, {});
    for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
        int c = entries_[i].color;
        if (c < 0 || c >= r_) throw std::invalid_argument("priority entry color out of range");
        by_color_[c].push_back(i);
    }
}

const PriorityEntry* PriorityList::find(const OrderedKey& key, int color) const {
    for (int i : by_color_.at(color))
        if (entries_[i].key == key) return &entries_[i];
    return nullptr;
}

std::string PriorityList::to_text() const {
    std::ostringstream out;
    out << "# colors " << r_ << "\n";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        out << (i + 1) << "  " << (e.color + 1) << "  lambda=" << format_ext(e.lambda) << "  flag=" << (e.flagged ? 1 : 0)
            << "  graph=" << key_to_text(e.key) << "\n";
    }
    return out.str();
}

PriorityList PriorityList::from_text(std::istream& in) {
    std::vector<PriorityEntry> entries;
    int colors = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::istringstream h(t.substr(1));
            std::string word;
            int r;
            if (h >> word && word == "colors" && h >> r) colors = std::max(colors, r);
            continue;
        }
        std::istringstream fields(t);
        std::string rank, color, lambda, flag, graph;
        if (!(fields >> rank >> color >> lambda >> flag >> graph))
            throw ParseError("priority list line " + std::to_string(lineno) + ": expected 5 fields");
        auto value_of = [&](const std::string& field, const std::string& name) {
            if (field.rfind(name + "=", 0) != 0)
                throw ParseError("priority list line " + std::to_string(lineno) + ": expected " + name + "=");
            return field.substr(name.size() + 1);
        };
        PriorityEntry e;
        try {
            e.color = std::stoi(color) - 1;
        } catch (const std::exception&) {
            throw ParseError("priority list line " + std::to_string(lineno) + ": bad color");
        }
        if (e.color < 0) throw ParseError("priority list line " + std::to_string(lineno) + ": bad color");
        std::string lv = value_of(lambda, "lambda");
        e.lambda = lv == "-inf" ? ExtRational::neg_infinity() : ExtRational(parse_rational(lv));
        std::string fv = value_of(flag, "flag");
        if (fv != "0" && fv != "1") throw ParseError("priority list line " + std::to_string(lineno) + ": flag must be 0 or 1");
        e.flagged = fv == "1";
        e.key = key_from_text(value_of(graph, "graph"));
        colors = std::max(colors, e.color + 1);
        entries.push_back(e);
    }
    if (entries.empty()) throw ParseError("priority list is empty");
    return PriorityList(colors, std::move(entries));
}

PaintStrategy derive_priority_list(const Graph& F, int r, const Rational& theta, const std::vector<int>& alpha) {
    SubgraphFamily family = SubgraphFamily::enumerate(F);
    PaintStrategy st;
    st.theta = theta;
    st.alpha = pad_sequence(alpha, r, family.size());
    CwResult res = cw_full(family, r, theta, st.alpha, true);
    const CwRun& run = res.state;

    st.tie_family.assign(r, {});
    for (std::size_t i = 0; i < res.traces.size(); ++i) {
        const auto& t = res.traces[i];
        bool change = i == 0 || res.traces[i - 1].sigma != t.sigma;
        if (change && !t.primary.empty())
            st.tie_family[t.sigma].insert(st.tie_family[t.sigma].end(), t.primary[0].begin(), t.primary[0].end());
    }
    for (auto& f : st.tie_family) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }

    std::vector<PriorityEntry> entries;
    for (int s = 0; s < r; ++s)
        for (int node = 0; node < family.size(); ++node) {
            PriorityEntry e;
            e.key = family.node(node).key;
            e.color = s;
            e.lambda = run.scale().to_ext(run.lambda_of(node, s));
            e.flagged = std::binary_search(st.tie_family[s].begin(), st.tie_family[s].end(), node);
            entries.push_back(e);
        }
    st.list = PriorityList(r, std::move(entries));
    st.value = run.scale().to_rational(run.max_min_lambda());
    return st;
}

PaintStrategy derive_paint_strategy(const Graph& F, int r, const Rational& theta) {
    SubgraphFamily family = SubgraphFamily::enumerate(F);
    LambdaOptions opt;
    opt.variant = CwVariant::Full;
    LambdaOutcome o = big_lambda(family, r, theta, opt);
    return derive_priority_list(F, r, theta, o.alpha);
}

PaintDecision paint_decide(const Board& board, const PriorityList& list) {
    if (!board.has_pending()) throw std::logic_error("no pending vertex to color");
    int r = list.colors();
    if (r != board.colors()) throw std::invalid_argument("priority list and board disagree on the number of colors");
    int v = board.size() - 1;
    PaintDecision dec;
    dec.d.assign(r, ExtRational::neg_infinity());
    dec.flag.assign(r, 0);
    std::vector<char> found(r, 0);
    for (int s = 0; s < r; ++s) {
        for (int idx : list.of_color(s)) {
            const auto& e = list.entries()[idx];
            if (has_ordered_copy(e.key, board.graph(), board.colors_by_vertex(), s, v)) {
                dec.d[s] = e.lambda;
                dec.flag[s] = e.flagged;
                found[s] = 1;
                break;
            }
        }
        if (!found[s]) throw InvariantViolation("no listed class is created by the pending vertex; the list lacks the single vertex");
    }
    ExtRational best = *std::max_element(dec.d.begin(), dec.d.end());
    if (!best.is_finite()) throw InvariantViolation("every color creates a class that must never appear");
    for (int s = 0; s < r; ++s)
        if (dec.d[s] == best) dec.tied.push_back(s);
    // Among equal values a flagged class counts as more dangerous.
    dec.color = -1;
    for (int s : dec.tied)
        if (!dec.flag[s]) {
            dec.color = s;
            break;
        }
    if (dec.color < 0) dec.color = dec.tied.front();
    if (dec.tied.size() > 1) {
        int flagged = 0;
        for (int s : dec.tied) flagged += dec.flag[s];
        dec.tie_well_formed = dec.tied.size() == 2 && flagged == 1;
    }
    return dec;
}

int greedy_decide(const Board& board, const std::vector<Graph>& H) {
    if (!board.has_pending()) throw std::logic_error("no pending vertex to color");
    int r = board.colors();
    if (static_cast<int>(H.size()) != r) throw std::invalid_argument("one graph per color is required");
    int v = board.size() - 1;
    std::vector<char> allowed(board.size());
    for (int c = r - 1; c >= 0; --c) {
        for (int u = 0; u < board.size(); ++u) allowed[u] = u == v || board.color(u) == c;
        if (!find_embedding(H[c], board.graph(), allowed, v)) return c;
    }
    return 0;
}

WitnessConstants compute_witness_constants(const CwRun& state) {
    const auto& fam = state.family();
    int r = state.colors();
    const auto& scale = state.scale();
    Scaled gap = 0;
    for (int s = 0; s < r; ++s) {
        const auto& cs = state.color(s);
        std::vector<Scaled> values;
        for (int node = 0; node < fam.size(); ++node) {
            int parent = fam.node(node).parent;
            bool member = cs.in[node] != 0;
            bool child = parent < 0 ? !member : (cs.in[parent] != 0 && !member);
            if (member || child) values.push_back(cs.d[node]);
        }
        std::sort(values.begin(), values.end());
        for (std::size_t i = 1; i < values.size(); ++i) {
            Scaled diff = values[i] - values[i - 1];
            if (diff > 0 && (gap == 0 || diff < gap)) gap = diff;
        }
    }
    WitnessConstants wc;
    wc.epsilon = gap == 0 ? Rational(1) : scale.to_rational(gap);
    int v = fam.source().vertex_count();
    // v/epsilon rounded up; the bound only loosens.
    Rational ratio = Rational(v) / wc.epsilon;
    mpz_class k = ratio.get_num() / ratio.get_den();
    if (k * ratio.get_den() != ratio.get_num()) k += 1;
    wc.exponent = k + (k + 1) * (mpz_class(r) * fam.size() + 1) * (v + 1) + 2;
    if (wc.exponent > 1'000'000) throw ResourceLimit("vertex bound exponent too large to materialise");
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), mpz_class(r).get_mpz_t(), wc.exponent.get_ui());
    wc.vmax = power * v + 1;
    return wc;
}

WitnessReport check_witness_invariant(const Board& board, const PriorityList& list, const Rational& theta,
                                      const mpz_class& vmax) {
    WitnessReport rep;
    int n = board.size();
    if (n == 0) return rep;
    if (n > 64) throw std::invalid_argument("witness check supports boards up to 64 vertices");
    if (board.has_pending()) throw std::logic_error("witness check needs a fully painted board");
    if (mpz_class(n) > vmax) {
        rep.ok = false;
        rep.detail = "board larger than the vertex bound; bounded search not available";
        return rep;
    }
    if (sgn(min_mu(board.graph(), theta)) < 0) {
        rep.negative_subgraph = true;
        rep.detail = "board contains a subgraph with negative mu";
        return rep;
    }
    std::unordered_map<std::uint64_t, Rational> best;  // min mu over supersets
    for (const auto& e : list.entries()) {
        if (e.key.h > n) continue;
        for_each_ordered_copy(e.key, board.graph(), board.colors_by_vertex(), e.color, -1,
                              [&](const std::vector<int>& m) {
                                  ++rep.copies_checked;
                                  if (!e.lambda.is_finite()) {
                                      rep.ok = false;
                                      rep.detail = "copy of " + key_to_text(e.key) + " in color " +
                                                   std::to_string(e.color + 1) + " whose lambda is -inf";
                                      return false;
                                  }
                                  std::uint64_t mask = 0;
                                  for (int u : m) mask |= std::uint64_t{1} << u;
                                  auto it = best.find(mask);
                                  if (it == best.end()) it = best.emplace(mask, min_mu(board.graph(), theta, m)).first;
                                  if (it->second > e.lambda.value()) {
                                      rep.ok = false;
                                      rep.detail = "copy of " + key_to_text(e.key) + " in color " +
                                                   std::to_string(e.color + 1) + " has best witness mu " +
                                                   format_rational(it->second) + " > lambda " +
                                                   format_ext(e.lambda);
                                      return false;
                                  }
                                  return true;
                              });
        if (!rep.ok) break;
    }
    return rep;
}

}  // namespace ovr
