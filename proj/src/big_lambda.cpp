#include "ovr/big_lambda.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <future>
#include <unordered_map>

namespace ovr {

namespace {

struct Best {
    Scaled value;
    int color;
};

// 128-bit digest of a state key. Full keys run to kilobytes each; at the
// state budget a collision has probability below 2^-80.
struct Digest {
    std::uint64_t a, b;
    bool operator==(const Digest&) const = default;
};

struct DigestHash {
    std::size_t operator()(const Digest& d) const { return static_cast<std::size_t>(d.a); }
};

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    return x ^ (x >> 33);
}

Digest digest(const std::string& key) {
    std::uint64_t a = 0x243f6a8885a308d3ULL ^ key.size(), b = 0x13198a2e03707344ULL + key.size();
    for (std::size_t i = 0; i < key.size(); i += 8) {
        std::uint64_t w = 0;
        std::memcpy(&w, key.data() + i, std::min<std::size_t>(8, key.size() - i));
        a = mix(a ^ w) + 0x9e3779b97f4a7c15ULL;
        b = mix(b + (w ^ 0xa4093822299f31d0ULL)) ^ (b >> 29);
    }
    return {mix(a), mix(b ^ a)};
}

class Solver {
public:
    Solver(const LambdaOptions& opt) : opt_(opt) {}

    Scaled solve(const CwRun& st) {
        Digest key = digest(st.memo_key());
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second.value;
        if (memo_.size() >= opt_.state_budget) throw ResourceLimit("state budget exhausted in the branching evaluation");
        Best best{INT64_MAX, -1};
        for (int sigma = 0; sigma < st.colors(); ++sigma) {
            Scaled v = branch(st, sigma);
            if (v < best.value) best = {v, sigma};
        }
        memo_.emplace(key, best);
        return best.value;
    }

    Scaled branch(const CwRun& st, int sigma) {
        CwRun next = st;
        next.play_round(sigma);
        if (auto v = next.completion_value()) return *v;
        if (next.terminated()) throw InvariantViolation("run terminated without completing an ordering of F");
        return solve(next);
    }

    // Replays memo decisions from `st` and appends them to alpha.
    void extend(CwRun st, std::vector<int>& alpha) {
        while (!st.completion_value()) {
            auto it = memo_.find(digest(st.memo_key()));
            if (it == memo_.end()) throw std::logic_error("memo lost a state during replay");
            alpha.push_back(it->second.color);
            st.play_round(it->second.color);
        }
    }

    std::size_t size() const { return memo_.size(); }

private:
    const LambdaOptions& opt_;
    std::unordered_map<Digest, Best, DigestHash> memo_;
};

}  // namespace

LambdaOutcome big_lambda(const SubgraphFamily& family, int r, const Rational& theta, const LambdaOptions& options) {
    if (r < 2) throw std::invalid_argument("at least two colors are required");
    CwRun root(family, r, theta, options.variant, options.check_invariants);
    LambdaOutcome out;

    if (options.jobs <= 1) {
        Solver solver(options);
        Scaled v = solver.solve(root);
        solver.extend(root, out.alpha);
        out.value = root.scale().to_rational(v);
        out.states = solver.size();
        return out;
    }

    // One solver per root color; the combination is in color order, so the
    // result does not depend on scheduling.
    std::vector<std::future<std::pair<Scaled, std::vector<int>>>> parts;
    std::vector<std::size_t> sizes(r, 0);
    for (int sigma = 0; sigma < r; ++sigma) {
        parts.push_back(std::async(std::launch::async, [&, sigma] {
            Solver solver(options);
            CwRun next = root;
            next.play_round(sigma);
            std::vector<int> alpha{sigma};
            Scaled v;
            if (auto c = next.completion_value())
                v = *c;
            else {
                v = solver.solve(next);
                solver.extend(next, alpha);
            }
            sizes[sigma] = solver.size();
            return std::make_pair(v, alpha);
        }));
    }
    Scaled best = INT64_MAX;
    for (auto& f : parts) {
        auto [v, alpha] = f.get();
        if (v < best) {
            best = v;
            out.alpha = alpha;
        }
    }
    out.value = root.scale().to_rational(best);
    for (auto s : sizes) out.states += s;
    return out;
}

std::vector<int> pad_sequence(std::vector<int> alpha, int r, int family_size) {
    std::size_t need = static_cast<std::size_t>(r) * family_size;
    while (alpha.size() < need) alpha.push_back(0);
    return alpha;
}

}  // namespace ovr
