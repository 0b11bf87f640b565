#include "ovr/functionals.hpp"

#include <stdexcept>

namespace ovr {

Rational mu_theta(const Graph& H, const Rational& theta) {
    return Rational(H.vertex_count()) - Rational(H.edge_count()) * theta;
}

ExtRational lambda_theta(const Graph& H, const std::vector<ExtRational>& w, const Rational& theta) {
    if (static_cast<int>(w.size()) < H.vertex_count()) throw std::invalid_argument("weight vector too short");
    Rational sum = -Rational(H.edge_count()) * theta;
    for (int u = 0; u < H.vertex_count(); ++u) {
        if (w[u].is_neg_infinity()) return ExtRational::neg_infinity();
        sum += 1 + w[u].value();
    }
    return ExtRational(sum);
}

Rational d_theta(const Graph& H, int v, const std::vector<ExtRational>& w, const Rational& theta) {
    int n = H.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("d_theta: vertex out of range");
    if (n > 20) throw std::invalid_argument("d_theta: graph too large for subset enumeration");
    std::vector<int> others;
    for (int u = 0; u < n; ++u)
        if (u != v) {
            if (w.at(u).is_neg_infinity()) throw std::invalid_argument("d_theta: infinite weight outside v");
            others.push_back(u);
        }
    Rational best(0);
    int k = static_cast<int>(others.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> J{v};
        Rational sum(0);
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1u) {
                J.push_back(others[i]);
                sum += 1 + w[others[i]].value();
            }
        int e = H.induced(J).edge_count();
        sum -= Rational(e) * theta;
        if (sum < best) best = sum;
    }
    return best;
}

}  // namespace ovr
