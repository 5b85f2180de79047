#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cliquemotif/reduction.hpp"

namespace cliquemotif {

// Gadgets mapping Clique to Closest Substring over {0,1}. A block is
// front tag | encoding part | back tag; choice strings concatenate one block
// per edge with no separators, and one template string (front tag | 1^nk |
// 0^back) anchors the center's structure.

// Length-n unary position code: single 1 at 1-based position pos.
inline SymbolString number_string(int pos, int n) {
    if (pos < 1 || pos > n) throw std::invalid_argument("number_string: position out of range");
    std::vector<Symbol> out(static_cast<std::size_t>(n), 0);
    out[static_cast<std::size_t>(pos) - 1] = 1;
    return SymbolString(out);
}

// (1^{3nk} 0)^{nk}, length (3nk+1)*nk.
inline SymbolString front_tag(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("front_tag: n and k must be positive");
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(3 * n * k + 1) * static_cast<std::size_t>(n * k));
    for (int rep = 0; rep < n * k; ++rep) {
        detail::append_run(out, 1, 3 * n * k);
        out.push_back(0);
    }
    return SymbolString(out);
}

// C(k,2) sections of length nk-2k+2 each; section iprime is all 1s.
inline SymbolString back_tag(int iprime, int n, int k) {
    const int sections = choose2(k);
    if (iprime < 1 || iprime > sections)
        throw std::invalid_argument("back_tag: section index out of range");
    const int width = n * k - 2 * k + 2;
    if (width < 0) throw std::invalid_argument("back_tag: n too small for k");
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(sections) * static_cast<std::size_t>(width));
    detail::append_run(out, 0, (iprime - 1) * width);
    detail::append_run(out, 1, width);
    detail::append_run(out, 0, (sections - iprime) * width);
    return SymbolString(out);
}

// k sections of length n; sections i and j carry the endpoints' number
// strings, the rest are 0^n. Weight is exactly 2.
inline SymbolString encode_part(int i, int j, std::pair<int, int> edge, int n, int k) {
    if (i < 1 || i >= j || j > k) throw std::invalid_argument("encode_part: bad sections");
    auto [r, s] = edge;
    if (r < 1 || r >= s || s > n) throw std::invalid_argument("encode_part: bad edge");
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int sec = 1; sec <= k; ++sec) {
        if (sec == i)
            detail::append_string(out, number_string(r, n));
        else if (sec == j)
            detail::append_string(out, number_string(s, n));
        else
            detail::append_run(out, 0, n);
    }
    return SymbolString(out);
}

inline SymbolString binary_block(int i, int j, std::pair<int, int> edge, int n, int k) {
    std::vector<Symbol> out;
    detail::append_string(out, front_tag(n, k));
    detail::append_string(out, encode_part(i, j, edge, n, k));
    detail::append_string(out, back_tag(pair_rank(i, j, k), n, k));
    return SymbolString(out);
}

// MaxDistance instance with K = C(k,2)+1 strings (template last),
// L = (3nk+1)nk + nk + C(k,2)(nk-2k+2), d = nk-k.
inline std::pair<MotifInstance, ReductionMeta> reduce_binary(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("reduce_binary: k must be at least 3");
    if (g.n < 2)
        throw std::invalid_argument("reduce_binary: back tag needs n >= 2");

    const int n = g.n;
    const long long target = (3LL * n * k + 1) * n * k + 1LL * n * k +
                             1LL * choose2(k) * (1LL * n * k - 2 * k + 2);
    if (target * std::max(1, g.edge_count()) > 100'000'000)
        throw std::invalid_argument("reduce_binary: instance would be too large");

    const int back_width = n * k - 2 * k + 2;

    ReductionMeta meta;
    meta.variant = Variant::Binary;
    meta.n = n;
    meta.m = g.edge_count();
    meta.k = k;
    meta.edge_order = g.edges;
    meta.layout = BlockLayout{(3 * n * k + 1) * n * k, n * k, choose2(k) * back_width};
    meta.template_count = 1;

    MotifInstance inst;
    inst.metric = Metric::MaxDistance;
    inst.alphabet_size = 2;
    inst.target_length = meta.layout.total();
    inst.distance_bound = n * k - k;

    const SymbolString front = front_tag(n, k);
    for (int rank = 1; rank <= meta.choice_count(); ++rank) {
        auto [i, j] = pair_at(rank, k);
        const SymbolString back = back_tag(rank, n, k);
        std::vector<Symbol> str;
        str.reserve(static_cast<std::size_t>(meta.m) *
                    static_cast<std::size_t>(inst.target_length));
        for (int b = 1; b <= meta.m; ++b) {
            detail::append_string(str, front);
            detail::append_string(str, encode_part(i, j, meta.edge_order[b - 1], n, k));
            detail::append_string(str, back);
        }
        inst.strings.emplace_back(str);
    }
    std::vector<Symbol> tmpl;
    tmpl.reserve(static_cast<std::size_t>(inst.target_length));
    detail::append_string(tmpl, front);
    detail::append_run(tmpl, 1, n * k);
    detail::append_run(tmpl, 0, meta.layout.back_len);
    inst.strings.emplace_back(tmpl);
    return {std::move(inst), std::move(meta)};
}

namespace detail {

inline std::array<int, 3> region_distances(const SymbolString& center,
                                           const SymbolString& str, int offset,
                                           const BlockLayout& layout) {
    const auto off = static_cast<std::size_t>(offset);
    return {static_cast<int>(hamming(center, 0, str, off,
                                     static_cast<std::size_t>(layout.front_len))),
            static_cast<int>(hamming(center, static_cast<std::size_t>(layout.front_len),
                                     str, off + layout.front_len,
                                     static_cast<std::size_t>(layout.enc_len))),
            static_cast<int>(hamming(
                center, static_cast<std::size_t>(layout.front_len + layout.enc_len), str,
                off + layout.front_len + layout.enc_len,
                static_cast<std::size_t>(layout.back_len)))};
}

}  // namespace detail

// Witness for a k-clique: center front_tag | number(h_1)..number(h_k) |
// 0^back; per-region distances are checked against the exact profile
// (0, k-2, nk-2k+2) for each chosen block and (0, nk-k, 0) for the template.
inline Solution forward_witness_binary(const MotifInstance& inst,
                                       const ReductionMeta& meta,
                                       const VertexSet& clique) {
    detail::require_clique(meta, clique);
    const int n = meta.n, k = meta.k;

    Solution sol;
    std::vector<Symbol> center;
    center.reserve(static_cast<std::size_t>(meta.target_length()));
    detail::append_string(center, front_tag(n, k));
    for (int h : clique) detail::append_string(center, number_string(h, n));
    detail::append_run(center, 0, meta.layout.back_len);
    sol.center = SymbolString(center);

    for (int rank = 1; rank <= meta.choice_count(); ++rank) {
        auto [i, j] = pair_at(rank, k);
        const int b = meta.block_index(clique[i - 1], clique[j - 1]);
        sol.offsets.push_back(meta.block_offset(b));
    }
    sol.offsets.push_back(0);  // the template's only admissible offset

    const int back_width = n * k - 2 * k + 2;
    for (int rank = 1; rank <= meta.choice_count(); ++rank) {
        const auto reg = detail::region_distances(sol.center, inst.strings[rank - 1],
                                                  sol.offsets[rank - 1], meta.layout);
        if (reg[0] != 0 || reg[1] != k - 2 || reg[2] != back_width)
            throw std::logic_error("forward_witness_binary: block distance profile violated");
    }
    const auto reg = detail::region_distances(sol.center, inst.strings.back(), 0, meta.layout);
    if (reg[0] != 0 || reg[1] != n * k - k || reg[2] != 0)
        throw std::logic_error("forward_witness_binary: template distance profile violated");
    return sol;
}

namespace detail {

// Shared by the binary and consensus extractors: one 1 per encoding
// section, everything after the encoding part zero.
inline VertexSet extract_from_encoding(const ReductionMeta& meta,
                                       const SymbolString& center) {
    if (center.size() != static_cast<std::size_t>(meta.target_length()))
        throw std::invalid_argument("extract_clique: center length must be L");
    const int n = meta.n;
    VertexSet out;
    out.reserve(meta.k);
    for (int sec = 0; sec < meta.k; ++sec) {
        int vertex = 0;
        for (int p = 0; p < n; ++p) {
            if (center[static_cast<std::size_t>(meta.layout.front_len) + sec * n + p]) {
                if (vertex)
                    throw std::runtime_error("extract_clique: section " +
                                             std::to_string(sec + 1) +
                                             " has more than one 1");
                vertex = p + 1;
            }
        }
        if (!vertex)
            throw std::runtime_error("extract_clique: section " +
                                     std::to_string(sec + 1) + " has no 1");
        out.push_back(vertex);
    }
    const std::size_t back_start =
        static_cast<std::size_t>(meta.layout.front_len) + meta.layout.enc_len;
    for (int p = 0; p < meta.layout.back_len; ++p)
        if (center[back_start + p])
            throw std::runtime_error("extract_clique: back tag region is not all zero");
    for (std::size_t t = 1; t < out.size(); ++t)
        if (out[t] <= out[t - 1])
            throw std::runtime_error("extract_clique: vertices not strictly increasing");
    return out;
}

}  // namespace detail

inline VertexSet extract_clique_binary(const ReductionMeta& meta,
                                       const SymbolString& center) {
    return detail::extract_from_encoding(meta, center);
}

}  // namespace cliquemotif
