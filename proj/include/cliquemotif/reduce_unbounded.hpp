#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cliquemotif/reduction.hpp"

namespace cliquemotif {

// Gadgets mapping Clique to Closest Substring over an alphabet of
// n + C(k,2) + 1 symbols: one sigma per vertex, one phi per choice string,
// and a shared synchronizing symbol '#'. Each choice string concatenates one
// length-(k+1) block per edge, separated by length-k phi barriers.

// Block of choice string c_{i,j}: sigma_r at position i, sigma_s at
// position j, '#' last, phi_{iprime} everywhere else (1-based positions).
inline SymbolString unbounded_block(int n, int k, int iprime, int i, int j,
                                    std::pair<int, int> edge) {
    if (i < 1 || i >= j || j > k) throw std::invalid_argument("unbounded_block: bad sections");
    if (iprime < 1 || iprime > choose2(k))
        throw std::invalid_argument("unbounded_block: bad string rank");
    auto [r, s] = edge;
    if (r < 1 || r >= s || s > n) throw std::invalid_argument("unbounded_block: bad edge");
    const Symbol phi = static_cast<Symbol>(n + iprime - 1);
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (int pos = 1; pos <= k; ++pos) {
        if (pos == i)
            out.push_back(static_cast<Symbol>(r - 1));
        else if (pos == j)
            out.push_back(static_cast<Symbol>(s - 1));
        else
            out.push_back(phi);
    }
    out.push_back(static_cast<Symbol>(n + choose2(k)));
    return SymbolString(out);
}

// MaxDistance instance with K = C(k,2) choice strings, L = k+1, d = k-2.
// An edgeless graph yields empty choice strings (unsolvable downstream).
inline std::pair<MotifInstance, ReductionMeta> reduce_unbounded(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("reduce_unbounded: k must be at least 3");
    if (static_cast<long long>(g.n) + choose2(k) + 1 > 65536)
        throw std::invalid_argument("reduce_unbounded: alphabet would exceed the symbol range");

    ReductionMeta meta;
    meta.variant = Variant::Unbounded;
    meta.n = g.n;
    meta.m = g.edge_count();
    meta.k = k;
    meta.edge_order = g.edges;
    meta.layout = BlockLayout{0, k, 1};
    meta.template_count = 0;

    MotifInstance inst;
    inst.metric = Metric::MaxDistance;
    inst.alphabet_size = meta.alphabet_size();
    inst.target_length = k + 1;
    inst.distance_bound = k - 2;

    for (int rank = 1; rank <= meta.choice_count(); ++rank) {
        auto [i, j] = pair_at(rank, k);
        std::vector<Symbol> str;
        if (meta.m > 0)
            str.reserve(static_cast<std::size_t>(meta.m) * (k + 1) +
                        static_cast<std::size_t>(meta.m - 1) * k);
        for (int b = 1; b <= meta.m; ++b) {
            if (b > 1) detail::append_run(str, meta.phi_id(rank), k);
            detail::append_string(str, unbounded_block(g.n, k, rank, i, j,
                                                       meta.edge_order[b - 1]));
        }
        inst.strings.emplace_back(str);
    }
    return {std::move(inst), std::move(meta)};
}

// Witness for a k-clique h_1 < ... < h_k: center sigma_{h_1}..sigma_{h_k}#,
// and in each c_{i,j} the block encoding edge (h_i, h_j). Every distance is
// verified to be exactly k-2.
inline Solution forward_witness_unbounded(const MotifInstance& inst,
                                          const ReductionMeta& meta,
                                          const VertexSet& clique) {
    detail::require_clique(meta, clique);
    Solution sol;
    std::vector<Symbol> center;
    center.reserve(static_cast<std::size_t>(meta.k) + 1);
    for (int h : clique) center.push_back(meta.sigma_id(h));
    center.push_back(meta.hash_id());
    sol.center = SymbolString(center);
    for (int rank = 1; rank <= meta.choice_count(); ++rank) {
        auto [i, j] = pair_at(rank, meta.k);
        const int b = meta.block_index(clique[i - 1], clique[j - 1]);
        sol.offsets.push_back(meta.block_offset(b));
    }
    const Evaluation ev = evaluate(inst, sol);
    for (int dist : ev.distances)
        if (dist != meta.k - 2)
            throw std::logic_error("forward_witness_unbounded: distance profile violated");
    return sol;
}

// Decodes the first k center symbols as vertices; fails unless they are
// strictly increasing sigma symbols followed by '#'.
inline VertexSet extract_clique_unbounded(const ReductionMeta& meta,
                                          const SymbolString& center) {
    if (center.size() != static_cast<std::size_t>(meta.k) + 1)
        throw std::invalid_argument("extract_clique_unbounded: center length must be k+1");
    VertexSet out;
    out.reserve(meta.k);
    for (int t = 0; t < meta.k; ++t) {
        const Symbol id = center[t];
        if (id >= static_cast<Symbol>(meta.n))
            throw std::runtime_error("extract_clique_unbounded: position " +
                                     std::to_string(t + 1) + " is not an encoding symbol");
        out.push_back(static_cast<int>(id) + 1);
    }
    if (center[meta.k] != meta.hash_id())
        throw std::runtime_error("extract_clique_unbounded: last symbol is not '#'");
    for (std::size_t t = 1; t < out.size(); ++t)
        if (out[t] <= out[t - 1])
            throw std::runtime_error("extract_clique_unbounded: vertices not strictly increasing");
    return out;
}

// Sidecar legend so external tools can decode centers.
inline std::string serialize_legend(const ReductionMeta& meta) {
    if (meta.variant != Variant::Unbounded)
        throw std::invalid_argument("serialize_legend: legend exists only for the unbounded variant");
    std::string out;
    for (int i = 1; i <= meta.n; ++i)
        out += "sigma " + std::to_string(i) + " " + std::to_string(meta.sigma_id(i)) + "\n";
    for (int r = 1; r <= meta.choice_count(); ++r)
        out += "phi " + std::to_string(r) + " " + std::to_string(meta.phi_id(r)) + "\n";
    out += "hash " + std::to_string(meta.hash_id()) + "\n";
    return out;
}

}  // namespace cliquemotif
