#pragma once

#include <utility>
#include <vector>

#include "cliquemotif/reduce_binary.hpp"

namespace cliquemotif {

// Gadgets mapping Clique to Consensus Patterns over {0,1}. Blocks are
// front tag | encoding part (no back tag); the distance budget is balanced
// by C(k,2)-(k-1) identical template strings (front tag | 1^nk) instead.

// (1^{nk^3} 0)^{nk^3} 0^{nk^3}, length n^2 k^6 + 2 n k^3.
inline SymbolString consensus_front_tag(int n, int k) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("consensus_front_tag: n and k must be positive");
    const int unit = n * k * k * k;
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(unit) * (static_cast<std::size_t>(unit) + 1) + unit);
    for (int rep = 0; rep < unit; ++rep) {
        detail::append_run(out, 1, unit);
        out.push_back(0);
    }
    detail::append_run(out, 0, unit);
    return SymbolString(out);
}

inline SymbolString consensus_block(int i, int j, std::pair<int, int> edge, int n, int k) {
    std::vector<Symbol> out;
    detail::append_string(out, consensus_front_tag(n, k));
    detail::append_string(out, encode_part(i, j, edge, n, k));
    return SymbolString(out);
}

// SumDistance instance with K = C(k,2) choice strings followed by
// C(k,2)-(k-1) template strings; L = n^2 k^6 + 2 n k^3 + nk and
// d = (C(k,2)-(k-1)) * nk.
inline std::pair<MotifInstance, ReductionMeta> reduce_consensus(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("reduce_consensus: k must be at least 3");
    if (g.n < 1) throw std::invalid_argument("reduce_consensus: graph must have vertices");

    const int n = g.n;
    const long long unit = 1LL * n * k * k * k;
    const long long target = unit * unit + 2 * unit + 1LL * n * k;
    if (target * std::max(1, g.edge_count()) > 100'000'000)
        throw std::invalid_argument("reduce_consensus: instance would be too large");
    const int front_len = n * n * k * k * k * k * k * k + 2 * n * k * k * k;

    ReductionMeta meta;
    meta.variant = Variant::Consensus;
    meta.n = n;
    meta.m = g.edge_count();
    meta.k = k;
    meta.edge_order = g.edges;
    meta.layout = BlockLayout{front_len, n * k, 0};
    meta.template_count = choose2(k) - (k - 1);

    MotifInstance inst;
    inst.metric = Metric::SumDistance;
    inst.alphabet_size = 2;
    inst.target_length = meta.layout.total();
    inst.distance_bound = meta.template_count * n * k;

    const SymbolString front = consensus_front_tag(n, k);
    for (int rank = 1; rank <= meta.choice_count(); ++rank) {
        auto [i, j] = pair_at(rank, k);
        std::vector<Symbol> str;
        str.reserve(static_cast<std::size_t>(meta.m) *
                    static_cast<std::size_t>(inst.target_length));
        for (int b = 1; b <= meta.m; ++b) {
            detail::append_string(str, front);
            detail::append_string(str, encode_part(i, j, meta.edge_order[b - 1], n, k));
        }
        inst.strings.emplace_back(str);
    }
    std::vector<Symbol> tmpl;
    tmpl.reserve(static_cast<std::size_t>(inst.target_length));
    detail::append_string(tmpl, front);
    detail::append_run(tmpl, 1, n * k);
    const SymbolString template_string{tmpl};
    for (int t = 0; t < meta.template_count; ++t)
        inst.strings.push_back(template_string);
    return {std::move(inst), std::move(meta)};
}

// Witness for a k-clique: center front_tag | number(h_1)..number(h_k); the
// edge block in each choice string and offset 0 in every template. The sum
// of distances is verified to be exactly d.
inline Solution forward_witness_consensus(const MotifInstance& inst,
                                          const ReductionMeta& meta,
                                          const VertexSet& clique) {
    detail::require_clique(meta, clique);
    Solution sol;
    std::vector<Symbol> center;
    center.reserve(static_cast<std::size_t>(meta.target_length()));
    detail::append_string(center, consensus_front_tag(meta.n, meta.k));
    for (int h : clique) detail::append_string(center, number_string(h, meta.n));
    sol.center = SymbolString(center);

    for (int rank = 1; rank <= meta.choice_count(); ++rank) {
        auto [i, j] = pair_at(rank, meta.k);
        const int b = meta.block_index(clique[i - 1], clique[j - 1]);
        sol.offsets.push_back(meta.block_offset(b));
    }
    for (int t = 0; t < meta.template_count; ++t) sol.offsets.push_back(0);

    const Evaluation ev = evaluate(inst, sol);
    if (ev.aggregate != inst.distance_bound)
        throw std::logic_error("forward_witness_consensus: total distance is not exactly d");
    return sol;
}

inline VertexSet extract_clique_consensus(const ReductionMeta& meta,
                                          const SymbolString& center) {
    return detail::extract_from_encoding(meta, center);
}

}  // namespace cliquemotif
