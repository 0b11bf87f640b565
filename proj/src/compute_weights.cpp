#include "ovr/compute_weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ovr {

namespace {

int edges_within(const OrderedKey& k, std::uint32_t positions) {
    int e = 0;
    for (int b = 0; b < k.h; ++b) {
        if (!(positions >> b & 1u)) continue;
        for (int a = 0; a < b; ++a)
            if ((positions >> a & 1u) && k.has_edge(a, b)) ++e;
    }
    return e;
}

std::vector<int> all_subgraph_ids(const SubgraphFamily& fam, int node) {
    const OrderedKey& k = fam.node(node).key;
    std::set<int> ids;
    for (std::uint32_t U = 1; U < (1u << k.h); ++U) {
        OrderedKey r = restrict_key(k, U);
        for (std::uint64_t s = r.bits;; s = (s - 1) & r.bits) {
            int id = fam.find(OrderedKey{s, r.h});
            if (id >= 0) ids.insert(id);
            if (s == 0) break;
        }
    }
    return {ids.begin(), ids.end()};
}

}  // namespace

CwRun::CwRun(const SubgraphFamily& family, int r, const Rational& theta, CwVariant variant, bool check_invariants)
    : family_(&family), r_(r), scale_(ThetaScale::from(theta)), variant_(variant), check_(check_invariants) {
    if (r < 1) throw std::invalid_argument("number of colors must be positive");
    int n = family.size();
    colors_.resize(r);
    for (auto& c : colors_) {
        c.in.assign(n, 0);
        c.w.assign(n, 0);
        c.d.assign(n, kScaledNegInf);
        c.ignored.assign(n, 0);
        c.d[family.root()] = 0;
    }
    pending_sandwich_.resize(r);
}

void CwRun::fail(const std::string& what) const {
    std::ostringstream out;
    out << "invariant violated: " << what << "\n";
    for (const auto& line : trace_log_) out << "  " << line << "\n";
    throw InvariantViolation(out.str());
}

Scaled CwRun::compute_d(int s, int node) const {
    const FamilyNode& nd = family_->node(node);
    int h = nd.key.h;
    if (h == 1) return 0;
    std::vector<Scaled> wpos(h, 0);
    for (int i = 1; i < h; ++i) {
        int anc = nd.ancestors[i];
        if (!colors_[s].in[anc]) fail("d requested for a node whose ancestors are not all present");
        wpos[i] = checked_add(scale_.q, colors_[s].w[anc]);
    }
    Scaled best = 0;
    std::uint32_t rest = (1u << h) - 2;
    for (std::uint32_t M = rest;; M = (M - 1) & rest) {
        if (M != 0) {
            Scaled sum = 0;
            for (int i = 1; i < h; ++i)
                if (M >> i & 1u) sum = checked_add(sum, wpos[i]);
            sum = checked_sub(sum, checked_mul(scale_.p, edges_within(nd.key, M | 1u)));
            best = std::min(best, sum);
        }
        if (M == 0) break;
    }
    return best;
}

void CwRun::add_member(int s, int node, Scaled w) {
    ColorState& c = colors_[s];
    if (c.in[node]) fail("node added twice");
    int p = family_->node(node).parent;
    if (p >= 0 && !c.in[p]) fail("closure: parent missing when adding a node");
    if (check_ && w > 0) fail("positive weight assigned");
    c.in[node] = 1;
    c.w[node] = w;
    ++c.count;
    for (int child : family_->node(node).children) c.d[child] = compute_d(s, child);
}

std::vector<int> CwRun::children_of(int s) const {
    const ColorState& c = colors_[s];
    std::vector<int> out;
    if (c.count == 0) {
        out.push_back(family_->root());
        return out;
    }
    for (int id = 0; id < family_->size(); ++id) {
        if (c.in[id] || c.ignored[id]) continue;
        int p = family_->node(id).parent;
        if (p >= 0 && c.in[p]) out.push_back(id);
    }
    return out;
}

std::vector<Scaled> CwRun::current_d() const {
    std::vector<Scaled> d(r_, kScaledNegInf);
    for (int s = 0; s < r_; ++s)
        for (int id : children_of(s)) d[s] = std::max(d[s], colors_[s].d[id]);
    return d;
}

bool CwRun::forward_hit(int s, int node, Scaled key) const {
    const auto& fw = colors_[s].forward;
    auto it = fw.find(key);
    if (it == fw.end()) return false;
    const auto& subs = family_->node(node).youngest_subgraphs;
    for (int id : it->second)
        if (std::binary_search(subs.begin(), subs.end(), id)) return true;
    return false;
}

void CwRun::check_pending_sandwich(int s, Scaled next_d) {
    // Pending entries whose index is the latest played round of s need the
    // d-value of the round after it, which is next_d.
    auto& pend = pending_sandwich_[s];
    const auto& played = colors_[s].played;
    std::vector<Sandwich> keep;
    for (const auto& e : pend) {
        Scaled hi = played[e.played_index].d;
        Scaled lo;
        if (e.played_index + 1 < static_cast<int>(played.size()))
            lo = played[e.played_index + 1].d;
        else if (e.played_index + 1 == static_cast<int>(played.size()))
            lo = next_d;
        else {
            keep.push_back(e);
            continue;
        }
        bool ok = e.lower ? (lo <= e.D && e.D < hi) : (lo < e.D && e.D <= hi);
        if (!ok) fail("sandwich property for node " + std::to_string(e.node));
    }
    pend = keep;
}

RoundTrace CwRun::play_round(int sigma) {
    if (sigma < 0 || sigma >= r_) throw std::invalid_argument("color out of range");
    if (terminated()) throw std::logic_error("play_round after termination");
    ++round_;
    RoundTrace t;
    t.round = round_;
    t.sigma = sigma;
    t.d = current_d();
    for (int s = 0; s < r_; ++s)
        if (t.d[s] == kScaledNegInf) fail("color " + std::to_string(s + 1) + " has no candidate children");
    if (check_ && !last_d_.empty()) {
        for (int s = 0; s < r_; ++s) {
            if (s == last_sigma_ && !(t.d[s] < last_d_[s])) fail("d of the played color did not decrease");
            if (s != last_sigma_ && t.d[s] != last_d_[s]) fail("d of an unplayed color changed");
        }
    }
    Scaled ds = t.d[sigma];
    Scaled w = 0;
    for (int s = 0; s < r_; ++s)
        if (s != sigma) w = checked_add(w, t.d[s]);
    t.w = w;
    ColorState& C = colors_[sigma];
    if (check_ && !C.played.empty()) {
        Scaled prev = C.played.back().w;
        bool consecutive = last_sigma_ == sigma;
        if (w > prev || (consecutive != (w == prev))) fail("primary weight monotonicity");
    }
    C.played.push_back({round_, ds, w});
    const bool full = variant_ == CwVariant::Full;

    for (int j = 1;; ++j) {
        std::vector<int> cij;
        for (int id : children_of(sigma))
            if (C.d[id] == ds) cij.push_back(id);
        if (cij.empty()) {
            if (j == 1) fail("first primary batch is empty");
            break;
        }
        if (j == 1 && full) {
            if (C.forward.count(ds)) fail("forward set written twice");
            C.forward[ds] = cij;
        }
        for (int id : cij) {
            add_member(sigma, id, w);
            if (family_->node(id).is_full) t.full_entered = true;
        }
        t.primary.push_back(cij);
        t.secondary.emplace_back();
        if (!full) continue;

        for (int k = 1;; ++k) {
            std::vector<std::pair<int, Scaled>> cijk;
            for (int id : children_of(sigma)) {
                Scaled D = C.d[id];
                if (D < ds) continue;
                if (!(D > ds || !forward_hit(sigma, id, ds))) continue;
                bool lower = !forward_hit(sigma, id, D);
                int pick = -1;
                for (int x = static_cast<int>(C.played.size()) - 1; x >= 0; --x) {
                    Scaled dx = C.played[x].d;
                    if (lower ? D < dx : D <= dx) {
                        pick = x;
                        break;
                    }
                }
                if (pick < 0) fail("no admissible weight index for a secondary threat");
                cijk.emplace_back(id, C.played[pick].w);
                if (check_) pending_sandwich_[sigma].push_back({id, pick, lower, D});
            }
            if (cijk.empty()) break;
            std::vector<int> ids;
            for (auto [id, wt] : cijk) {
                add_member(sigma, id, wt);
                ids.push_back(id);
            }
            t.secondary.back().push_back(ids);
            if (check_) {
                // Partner: moving position k to the front gives a member of C^{i,j}
                // with pointwise larger-or-equal weights.
                for (int id : ids) {
                    const OrderedKey& key = family_->node(id).key;
                    if (k >= key.h) fail("secondary threat with too few vertices for its partner");
                    std::vector<int> perm(key.h);
                    for (int p = 0; p < key.h; ++p) perm[p] = p < k ? p + 1 : (p == k ? 0 : p);
                    int partner = family_->find(permute_key(key, perm));
                    if (partner < 0 || !std::binary_search(cij.begin(), cij.end(), partner))
                        fail("partner of node " + std::to_string(id) + " not in the primary batch");
                    auto wa = weight_vector(id, sigma);
                    auto wb = weight_vector(partner, sigma);
                    for (int p = 0; p < key.h; ++p)
                        if (wa[p] > wb[perm[p]]) fail("partner weights not pointwise larger");
                }
            }
        }
        if (check_) {
            for (int id : children_of(sigma)) {
                if (C.d[id] > ds) fail("child above d after the primary loop");
                if (C.d[id] == ds && !forward_hit(sigma, id, ds)) fail("end-of-loop forward condition");
            }
        }
    }
    if (!full) {
        for (int id : children_of(sigma))
            if (C.d[id] > ds) C.ignored[id] = 1;
    }
    if (check_) {
        Scaled next = kScaledNegInf;
        for (int id : children_of(sigma)) next = std::max(next, C.d[id]);
        if (full) check_pending_sandwich(sigma, next);
        if (round_ > r_ * family_->size()) fail("more rounds than r * |S(F)|");
        for (int s = 0; s < r_; ++s)
            for (int id = 0; id < family_->size(); ++id)
                if (colors_[s].in[id] && colors_[s].w[id] > 0) fail("positive stored weight");
    }
    if (t.full_entered && !completion_) {
        Scaled v = scale_.q;
        for (Scaled x : t.d) v = checked_add(v, x);
        completion_ = v;
        completion_round_ = round_;
    }
    last_d_ = t.d;
    last_sigma_ = sigma;
    if (check_) trace_log_.push_back(format_trace(t));
    return t;
}

bool CwRun::terminated() const {
    for (const auto& c : colors_)
        if (c.count == family_->size()) return true;
    return false;
}

std::vector<Scaled> CwRun::weight_vector(int node, int s) const {
    const FamilyNode& nd = family_->node(node);
    std::vector<Scaled> w(nd.key.h, kScaledNegInf);
    for (int i = 0; i < nd.key.h; ++i) {
        int anc = nd.ancestors[i];
        if (colors_[s].in[anc]) w[i] = colors_[s].w[anc];
    }
    return w;
}

Scaled CwRun::lambda_of(int node, int s) const {
    const FamilyNode& nd = family_->node(node);
    Scaled sum = 0;
    for (int i = 0; i < nd.key.h; ++i) {
        int anc = nd.ancestors[i];
        if (!colors_[s].in[anc]) return kScaledNegInf;
        sum = checked_add(sum, checked_add(scale_.q, colors_[s].w[anc]));
    }
    return checked_sub(sum, checked_mul(scale_.p, nd.key.edge_count()));
}

Scaled CwRun::lambda_min_over_subgraphs(int node, int s) const {
    Scaled best = INT64_MAX;
    for (int id : all_subgraph_ids(*family_, node)) best = std::min(best, lambda_of(id, s));
    return best;
}

Scaled CwRun::max_min_lambda() const {
    Scaled best = kScaledNegInf;
    for (int s = 0; s < r_; ++s)
        for (int id : family_->full_nodes()) best = std::max(best, lambda_min_over_subgraphs(id, s));
    return best;
}

std::string CwRun::memo_key() const {
    std::string key;
    auto put = [&key](Scaled x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
    for (const auto& c : colors_) {
        key.push_back('|');
        for (int id = 0; id < family_->size(); ++id) {
            char flag = static_cast<char>((c.in[id] ? 1 : 0) | (c.ignored[id] ? 2 : 0));
            key.push_back(flag);
            if (c.in[id]) put(c.w[id]);
        }
        if (variant_ == CwVariant::Full) {
            for (const auto& [d, ids] : c.forward) {
                put(d);
                for (int id : ids) put(id);
                key.push_back(';');
            }
            key.push_back('#');
            for (const auto& p : c.played) {
                put(p.d);
                put(p.w);
            }
        }
    }
    if (variant_ == CwVariant::Full) {
        // The weight monotonicity check compares against the previous color.
        key.push_back(static_cast<char>(last_sigma_ + 1));
    }
    return key;
}

void CwRun::check_final_invariants() const {
    for (int s = 0; s < r_; ++s) {
        const ColorState& c = colors_[s];
        for (int id = 0; id < family_->size(); ++id) {
            if (!c.in[id]) continue;
            int p = family_->node(id).parent;
            if (p >= 0 && !c.in[p]) fail("closure violated at the end of the run");
            if (c.w[id] > 0) fail("positive weight at the end of the run");
            // Subgraph weight monotonicity over subgraphs containing the
            // youngest vertex, with the explicit vertex correspondence.
            const OrderedKey& key = family_->node(id).key;
            auto wh = weight_vector(id, s);
            for (std::uint32_t U = 1; U < (1u << key.h); U += 2) {
                OrderedKey rk = restrict_key(key, U);
                std::vector<int> pos;
                for (int p2 = 0; p2 < key.h; ++p2)
                    if (U >> p2 & 1u) pos.push_back(p2);
                for (std::uint64_t e = rk.bits;; e = (e - 1) & rk.bits) {
                    int jid = family_->find(OrderedKey{e, rk.h});
                    if (jid >= 0) {
                        if (!c.in[jid]) fail("subgraph of a member is missing");
                        auto wj = weight_vector(jid, s);
                        for (int x = 0; x < rk.h; ++x)
                            if (wh[pos[x]] > wj[x]) fail("subgraph weight monotonicity");
                    }
                    if (e == 0) break;
                }
            }
        }
    }
}

std::string CwRun::format_trace(const RoundTrace& t) const {
    std::ostringstream out;
    out << t.round << ' ' << t.sigma + 1;
    for (Scaled x : t.d) out << ' ' << format_rational(scale_.to_rational(x));
    out << ' ' << format_rational(scale_.to_rational(t.w));
    std::size_t np = 0, ns = 0;
    for (const auto& c : t.primary) np += c.size();
    for (const auto& per_j : t.secondary)
        for (const auto& c : per_j) ns += c.size();
    out << ' ' << np << ' ' << ns;
    return out.str();
}

namespace {

CwResult run_sequence(const SubgraphFamily& family, int r, const Rational& theta, const std::vector<int>& alpha,
                      CwVariant variant, bool check) {
    CwResult res{CwRun(family, r, theta, variant, check), {}};
    std::size_t i = 0;
    while (true) {
        if (variant == CwVariant::Full && res.state.terminated()) break;
        if (variant == CwVariant::Simplified && res.state.completion_value()) break;
        if (i >= alpha.size()) throw std::invalid_argument("color sequence exhausted before termination");
        res.traces.push_back(res.state.play_round(alpha[i++]));
    }
    if (check && variant == CwVariant::Full) res.state.check_final_invariants();
    return res;
}

}  // namespace

CwResult cw_full(const SubgraphFamily& family, int r, const Rational& theta, const std::vector<int>& alpha,
                 bool check_invariants) {
    return run_sequence(family, r, theta, alpha, CwVariant::Full, check_invariants);
}

CwResult cw_simplified(const SubgraphFamily& family, int r, const Rational& theta, const std::vector<int>& alpha,
                       bool check_invariants) {
    return run_sequence(family, r, theta, alpha, CwVariant::Simplified, check_invariants);
}

}  // namespace ovr
