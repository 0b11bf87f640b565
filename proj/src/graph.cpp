#include "ovr/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace ovr {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphFormatError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw GraphFormatError("loop at vertex " + std::to_string(u));
        if (!g.add_edge(u, v))
            throw GraphFormatError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return n_++;
}

bool Graph::add_edge(int u, int v) {
    if (u == v || adjacent(u, v)) return false;
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return true;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    Graph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

bool Graph::is_forest() const {
    std::vector<int> parent(n_);
    for (int i = 0; i < n_; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges_) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj_[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
    }
    return count == n_;
}

Graph parse_graph(std::istream& in) {
    std::string line;
    std::vector<std::vector<long>> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<long> row;
        long x;
        while (ls >> x) row.push_back(x);
        if (!ls.eof()) throw GraphFormatError("line " + std::to_string(lineno) + ": expected integers");
        if (row.size() != 2) throw GraphFormatError("line " + std::to_string(lineno) + ": expected two integers");
        rows.push_back(row);
    }
    if (rows.empty()) throw GraphFormatError("missing header line 'n m'");
    long n = rows[0][0], m = rows[0][1];
    if (n < 0 || m < 0) throw GraphFormatError("negative n or m in header");
    if (static_cast<long>(rows.size()) - 1 != m)
        throw GraphFormatError("header announces " + std::to_string(m) + " edges, found " +
                               std::to_string(rows.size() - 1));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        long u = rows[i][0], v = rows[i][1];
        if (!(0 <= u && u < v && v < n))
            throw GraphFormatError("edge '" + std::to_string(u) + " " + std::to_string(v) +
                                   "' must satisfy 0 <= u < v < n");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphFormatError("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int vertices) {
    Graph g(vertices);
    for (int i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

bool OrderedKey::has_edge(int a, int b) const {
    return (bits >> pair_index(a, b)) & 1u;
}

int OrderedKey::edge_count() const { return std::popcount(bits); }

int OrderedKey::degree(int pos) const {
    int d = 0;
    for (int o = 0; o < h; ++o)
        if (o != pos && has_edge(pos, o)) ++d;
    return d;
}

std::string OrderedKey::encode() const {
    std::ostringstream out;
    out << h << ':' << std::hex << bits;
    return out.str();
}

OrderedKey canonical_key(const OrderedGraph& g) {
    int h = g.graph.vertex_count();
    if (h > kMaxOrderedVertices) throw std::invalid_argument("ordered graph too large for a 64-bit key");
    if (static_cast<int>(g.ordering.size()) != h) throw std::invalid_argument("ordering size mismatch");
    std::vector<int> pos(h, -1);
    for (int i = 0; i < h; ++i) {
        int v = g.ordering[i];
        if (v < 0 || v >= h || pos[v] != -1) throw std::invalid_argument("ordering is not a permutation");
        pos[v] = i;
    }
    OrderedKey k;
    k.h = h;
    for (auto [u, v] : g.graph.edges()) k.bits |= std::uint64_t{1} << pair_index(pos[u], pos[v]);
    return k;
}

OrderedKey restrict_key(const OrderedKey& k, std::uint32_t positions_mask) {
    std::vector<int> kept;
    for (int p = 0; p < k.h; ++p)
        if (positions_mask >> p & 1u) kept.push_back(p);
    OrderedKey r;
    r.h = static_cast<int>(kept.size());
    for (int a = 0; a < r.h; ++a)
        for (int b = a + 1; b < r.h; ++b)
            if (k.has_edge(kept[a], kept[b])) r.bits |= std::uint64_t{1} << pair_index(a, b);
    return r;
}

OrderedKey parent_key(const OrderedKey& k) {
    return restrict_key(k, ((1u << k.h) - 1) & ~1u);
}

OrderedGraph key_to_ordered_graph(const OrderedKey& k) {
    OrderedGraph g{Graph(k.h), {}};
    for (int a = 0; a < k.h; ++a) {
        g.ordering.push_back(a);
        for (int b = a + 1; b < k.h; ++b)
            if (k.has_edge(a, b)) g.graph.add_edge(a, b);
    }
    return g;
}

OrderedKey permute_key(const OrderedKey& k, const std::vector<int>& perm) {
    OrderedKey r;
    r.h = k.h;
    for (int a = 0; a < k.h; ++a)
        for (int b = a + 1; b < k.h; ++b)
            if (k.has_edge(a, b)) r.bits |= std::uint64_t{1} << pair_index(perm[a], perm[b]);
    return r;
}

std::string key_to_text(const OrderedKey& k) {
    std::ostringstream out;
    out << '<' << k.h << ';';
    bool first = true;
    for (int b = 0; b < k.h; ++b)
        for (int a = 0; a < b; ++a)
            if (k.has_edge(a, b)) {
                if (!first) out << ',';
                out << a << '-' << b;
                first = false;
            }
    out << '>';
    return out.str();
}

OrderedKey key_from_text(const std::string& text) {
    if (text.size() < 4 || text.front() != '<' || text.back() != '>')
        throw GraphFormatError("malformed graph field '" + text + "'");
    std::string body = text.substr(1, text.size() - 2);
    auto semi = body.find(';');
    if (semi == std::string::npos) throw GraphFormatError("malformed graph field '" + text + "'");
    OrderedKey k;
    try {
        k.h = std::stoi(body.substr(0, semi));
    } catch (const std::exception&) {
        throw GraphFormatError("malformed vertex count in '" + text + "'");
    }
    if (k.h < 1 || k.h > kMaxOrderedVertices) throw GraphFormatError("vertex count out of range in '" + text + "'");
    std::string rest = body.substr(semi + 1);
    std::istringstream es(rest);
    std::string item;
    while (std::getline(es, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw GraphFormatError("malformed edge '" + item + "'");
        int a = std::stoi(item.substr(0, dash)), b = std::stoi(item.substr(dash + 1));
        if (a < 0 || b < 0 || a >= k.h || b >= k.h || a == b) throw GraphFormatError("bad edge '" + item + "'");
        k.bits |= std::uint64_t{1} << pair_index(a, b);
    }
    return k;
}

}  // namespace ovr
