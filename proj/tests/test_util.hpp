#pragma once

// Shared fixtures and independent oracles for the test suite. The oracles
// here deliberately avoid the library's search and distance code paths so
// they can serve as ground truth for it.

#include <optional>
#include <random>
#include <vector>

#include "cliquemotif/graph.hpp"
#include "cliquemotif/instance.hpp"

namespace testutil {

using namespace cliquemotif;

// The worked 4-vertex example graph: edges (1,3), (1,4), (2,3), (3,4).
inline Graph fig1_graph() {
    return parse_graph(std::string("p edge 4 4\ne 1 3\ne 1 4\ne 2 3\ne 3 4\n"));
}

inline Graph triangle_graph() {
    return parse_graph(std::string("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"));
}

inline Graph edgeless_graph(int n) {
    return parse_graph("p edge " + std::to_string(n) + " 0\n");
}

// All k-subsets of 1..n in lexicographic order.
inline std::vector<std::vector<int>> all_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Clique oracle by plain subset enumeration over the raw edge list.
inline std::optional<std::vector<int>> brute_force_clique(const Graph& g, int k) {
    const auto has_edge = [&](int u, int v) {
        for (auto [a, b] : g.edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };
    for (const auto& sub : all_subsets(g.n, k)) {
        bool ok = true;
        for (std::size_t i = 0; i < sub.size() && ok; ++i)
            for (std::size_t j = i + 1; j < sub.size() && ok; ++j)
                ok = has_edge(sub[i], sub[j]);
        if (ok) return sub;
    }
    return std::nullopt;
}

// Position-by-position recount of a solution's distances, independent of
// hamming() and its packed fast paths.
inline std::vector<int> recount_distances(const MotifInstance& inst,
                                          const Solution& sol) {
    std::vector<int> out;
    for (std::size_t i = 0; i < inst.strings.size(); ++i) {
        int dist = 0;
        for (int c = 0; c < inst.target_length; ++c)
            dist += sol.center[static_cast<std::size_t>(c)] !=
                    inst.strings[i][static_cast<std::size_t>(sol.offsets[i] + c)];
        out.push_back(dist);
    }
    return out;
}

// Closest String decision by enumerating every center over 0..A-1.
inline std::optional<std::vector<Symbol>> brute_force_closest_string(
    const std::vector<std::vector<Symbol>>& strings, int alphabet, int d) {
    const std::size_t length = strings.empty() ? 0 : strings[0].size();
    std::vector<Symbol> cur(length, 0);
    while (true) {
        bool ok = true;
        for (const auto& s : strings) {
            int dist = 0;
            for (std::size_t c = 0; c < length; ++c) dist += cur[c] != s[c];
            if (dist > d) {
                ok = false;
                break;
            }
        }
        if (ok) return cur;
        int p = static_cast<int>(length) - 1;
        while (p >= 0 && cur[static_cast<std::size_t>(p)] == alphabet - 1) {
            cur[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0) return std::nullopt;
        ++cur[static_cast<std::size_t>(p)];
    }
}

inline std::vector<Symbol> random_symbols(std::mt19937& rng, int len, int alphabet) {
    std::vector<Symbol> out(static_cast<std::size_t>(len));
    for (auto& s : out) s = static_cast<Symbol>(rng() % static_cast<unsigned>(alphabet));
    return out;
}

// Random toy instance within the cross-validation bounds. Lengths may dip
// one below L so the short-string UNSAT path gets exercised.
inline MotifInstance random_instance(std::mt19937& rng, Metric metric) {
    MotifInstance inst;
    inst.metric = metric;
    inst.alphabet_size = 2 + static_cast<int>(rng() % 2);  // {2,3}
    inst.target_length = 1 + static_cast<int>(rng() % 6);  // 1..6
    inst.distance_bound = static_cast<int>(rng() % 4);     // 0..3
    const int count = 1 + static_cast<int>(rng() % 4);     // 1..4
    for (int i = 0; i < count; ++i) {
        const int lo = std::max(1, inst.target_length - 1);
        const int len = lo + static_cast<int>(rng() % static_cast<unsigned>(13 - lo));
        inst.strings.emplace_back(random_symbols(rng, len, inst.alphabet_size));
    }
    return inst;
}

}  // namespace testutil
