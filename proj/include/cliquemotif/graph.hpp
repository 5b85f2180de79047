#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cliquemotif/parse_error.hpp"

namespace cliquemotif {

// Simple undirected graph. Vertices are named 1..n. The edge list is kept
// canonical: every pair satisfies u < v and the list is strictly increasing
// in (u, v); this order is the e_1..e_m order used by all reductions.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }
};

// Strictly increasing vertex names in 1..n.
using VertexSet = std::vector<int>;

inline bool vertex_set_valid(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > g.n) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

// Graph file format: `c ...` comment lines, exactly one `p edge <n> <m>`
// line before any edge, then exactly m lines `e <u> <v>` with 1-based
// endpoints. Duplicate edges (in either orientation) are an error.
inline Graph parse_graph(std::istream& in) {
    Graph g;
    bool have_problem = false;
    long long declared_edges = 0;
    std::set<std::pair<int, int>> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_problem) throw ParseError(line_no, "duplicate problem line");
            std::string kind;
            long long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after header");
            g.n = static_cast<int>(n);
            declared_edges = m;
            have_problem = true;
        } else if (tag == "e") {
            if (!have_problem) throw ParseError(line_no, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v))
                throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after edge");
            if (static_cast<long long>(g.edges.size()) >= declared_edges)
                throw ParseError(line_no, "more edges than declared in header");
            if (u < 1 || u > g.n || v < 1 || v > g.n)
                throw ParseError(line_no, "vertex out of range");
            if (u == v) throw ParseError(line_no, "self-loop");
            int a = static_cast<int>(std::min(u, v));
            int b = static_cast<int>(std::max(u, v));
            if (!seen.insert({a, b}).second)
                throw ParseError(line_no, "duplicate edge");
            g.edges.emplace_back(a, b);
        } else {
            throw ParseError(line_no, "unrecognized line");
        }
    }
    if (!have_problem) throw ParseError(line_no, "missing problem line");
    if (static_cast<long long>(g.edges.size()) != declared_edges)
        throw ParseError(line_no, "fewer edges than declared in header");
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string serialize_graph(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.n) + " " +
                      std::to_string(g.edges.size()) + "\n";
    for (auto [u, v] : g.edges)
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// True iff every pair of vertices in s is an edge of g; empty and singleton
// sets are cliques. Throws if s is not a valid vertex set.
inline bool is_clique(const Graph& g, const VertexSet& s) {
    if (!vertex_set_valid(g, s))
        throw std::invalid_argument("is_clique: invalid vertex set");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

namespace detail {

inline bool clique_extend(const Graph& g, int k, const std::vector<int>& degree,
                          std::vector<int>& picked, int from) {
    if (static_cast<int>(picked.size()) == k) return true;
    const int need = k - static_cast<int>(picked.size());
    for (int v = from; v + need - 1 <= g.n; ++v) {
        if (degree[v] < k - 1) continue;
        bool ok = true;
        for (int u : picked) {
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        picked.push_back(v);
        if (clique_extend(g, k, degree, picked, v + 1)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace detail

// Lexicographically smallest k-clique, or nullopt. Depth-first extension
// over vertices in increasing order; vertices of degree < k-1 are skipped.
inline std::optional<VertexSet> find_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_clique: k must be positive");
    if (k > g.n) return std::nullopt;
    std::vector<int> degree(g.n + 1, 0);
    for (auto [u, v] : g.edges) {
        ++degree[u];
        ++degree[v];
    }
    std::vector<int> picked;
    picked.reserve(k);
    if (detail::clique_extend(g, k, degree, picked, 1)) return picked;
    return std::nullopt;
}

}  // namespace cliquemotif
