#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliquemotif/graph.hpp"
#include "cliquemotif/instance.hpp"

namespace cliquemotif {

enum class Variant { Unbounded, Binary, Consensus };

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Unbounded: return "unbounded";
        case Variant::Binary: return "binary";
        case Variant::Consensus: return "consensus";
    }
    return "?";
}

inline int choose2(int k) { return k * (k - 1) / 2; }

// Choice strings are ordered c_{1,2},...,c_{1,k},c_{2,3},...,c_{k-1,k};
// ranks are 1-based.
inline int pair_rank(int i, int j, int k) {
    if (i < 1 || i >= j || j > k) throw std::invalid_argument("pair_rank: bad pair");
    return (i - 1) * k - i * (i - 1) / 2 + (j - i);
}

inline std::pair<int, int> pair_at(int rank, int k) {
    if (rank < 1 || rank > choose2(k)) throw std::invalid_argument("pair_at: bad rank");
    int i = 1;
    while (rank > k - i) {
        rank -= k - i;
        ++i;
    }
    return {i, i + rank};
}

// Everything needed to decode solver output back into vertices: the input
// parameters, the canonical edge order, the block region layout, and (for
// the unbounded variant) the symbol legend.
struct ReductionMeta {
    Variant variant = Variant::Unbounded;
    int n = 0;  // vertex count
    int m = 0;  // edge count
    int k = 0;  // clique size
    std::vector<std::pair<int, int>> edge_order;
    BlockLayout layout;
    int template_count = 0;

    int choice_count() const { return choose2(k); }
    int string_count() const { return choice_count() + template_count; }
    int target_length() const { return layout.total(); }

    // Unbounded-variant legend: sigma_i -> i-1, phi_i' -> n+i'-1,
    // '#' -> n + C(k,2).
    Symbol sigma_id(int vertex) const { return static_cast<Symbol>(vertex - 1); }
    Symbol phi_id(int rank) const { return static_cast<Symbol>(n + rank - 1); }
    Symbol hash_id() const { return static_cast<Symbol>(n + choice_count()); }

    int alphabet_size() const {
        return variant == Variant::Unbounded ? n + choice_count() + 1 : 2;
    }

    // Distance between the starts of consecutive blocks in a choice string.
    int block_stride() const {
        return variant == Variant::Unbounded ? 2 * k + 1 : target_length();
    }

    // 0-based offset of 1-based block b within its choice string.
    int block_offset(int b) const { return (b - 1) * block_stride(); }

    // 1-based position of edge (u, v) in the canonical edge order.
    int block_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edge_order.begin(), edge_order.end(),
                                   std::make_pair(u, v));
        if (it == edge_order.end() || *it != std::make_pair(u, v))
            throw std::invalid_argument("block_index: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge");
        return static_cast<int>(it - edge_order.begin()) + 1;
    }
};

namespace detail {

inline void append_run(std::vector<Symbol>& out, Symbol s, int count) {
    out.insert(out.end(), static_cast<std::size_t>(count), s);
}

inline void append_string(std::vector<Symbol>& out, const SymbolString& s) {
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[i]);
}

// Shared precondition of all witness builders: clique must list exactly k
// strictly increasing vertices whose pairs are all edges.
inline void require_clique(const ReductionMeta& meta, const VertexSet& clique) {
    if (static_cast<int>(clique.size()) != meta.k)
        throw std::invalid_argument("forward witness: expected a set of k vertices");
    for (std::size_t i = 0; i < clique.size(); ++i) {
        if (clique[i] < 1 || clique[i] > meta.n)
            throw std::invalid_argument("forward witness: vertex out of range");
        if (i > 0 && clique[i] <= clique[i - 1])
            throw std::invalid_argument("forward witness: vertices must be strictly increasing");
    }
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            meta.block_index(clique[i], clique[j]);  // throws if not an edge
}

}  // namespace detail

}  // namespace cliquemotif
