#pragma once

#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "cliquemotif/graph.hpp"
#include "cliquemotif/reduce_binary.hpp"
#include "cliquemotif/reduce_consensus.hpp"
#include "cliquemotif/reduce_unbounded.hpp"
#include "cliquemotif/solver.hpp"

namespace cliquemotif {

// Labeled graph on n vertices from an edge-presence bitmask over the
// canonical pair order (1,2),(1,3),...,(n-1,n).
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (choose2(n) > 63) throw std::invalid_argument("graph_from_edge_mask: n too large");
    Graph g;
    g.n = n;
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++bit)
            if ((mask >> bit) & 1) g.edges.emplace_back(u, v);
    return g;
}

// Each pair present with probability 1/2, drawn from the generator's raw
// low bit so the graph sequence is identical on every platform.
inline Graph random_graph(int n, std::mt19937& rng) {
    Graph g;
    g.n = n;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() & 1u) g.edges.emplace_back(u, v);
    return g;
}

struct RoundTripResult {
    bool pass = false;
    bool inconclusive = false;  // solver hit a resource cap
    std::string failure;        // empty unless pass is false
    std::optional<VertexSet> clique;     // oracle side
    Verdict verdict = Verdict::Unsat;    // solver side
    std::optional<long long> aggregate;  // evaluation of the solver witness
    std::optional<VertexSet> extracted;  // decoded from the solver center
    long long nodes_explored = 0;
    long long offsets_pruned = 0;
};

// The reduction's defining equivalence, checked both ways on one graph:
// the clique oracle and the exact solver must agree, a SAT center must
// decode to a real k-clique, and when a clique exists the forward witness
// must hit its exact distance profile.
inline RoundTripResult round_trip(const Graph& g, int k, Variant variant,
                                  const SolverLimits& limits = {}) {
    RoundTripResult r;
    r.clique = find_clique(g, k);

    MotifInstance inst;
    ReductionMeta meta;
    switch (variant) {
        case Variant::Unbounded: std::tie(inst, meta) = reduce_unbounded(g, k); break;
        case Variant::Binary: std::tie(inst, meta) = reduce_binary(g, k); break;
        case Variant::Consensus: std::tie(inst, meta) = reduce_consensus(g, k); break;
    }

    const SolverReport rep = variant == Variant::Consensus
                                 ? consensus_exact(inst, limits)
                                 : closest_substring_exact(inst, limits);
    r.verdict = rep.verdict;
    r.nodes_explored = rep.nodes_explored;
    r.offsets_pruned = rep.offsets_pruned;
    if (rep.verdict == Verdict::ResourceLimit) {
        r.inconclusive = true;
        r.failure = "solver hit a resource cap";
        return r;
    }

    const bool sat = rep.verdict == Verdict::Sat;
    if (sat) {
        const Evaluation ev = evaluate(inst, *rep.solution);
        r.aggregate = ev.aggregate;
        if (!ev.feasible) {
            r.failure = "solver witness is infeasible";
            return r;
        }
        try {
            switch (variant) {
                case Variant::Unbounded:
                    r.extracted = extract_clique_unbounded(meta, rep.solution->center);
                    break;
                case Variant::Binary:
                    r.extracted = extract_clique_binary(meta, rep.solution->center);
                    break;
                case Variant::Consensus:
                    r.extracted = extract_clique_consensus(meta, rep.solution->center);
                    break;
            }
        } catch (const std::exception& e) {
            r.failure = std::string("center extraction failed: ") + e.what();
            return r;
        }
        if (static_cast<int>(r.extracted->size()) != k || !is_clique(g, *r.extracted)) {
            r.failure = "extracted vertex set is not a k-clique";
            return r;
        }
    }
    if (r.clique.has_value() != sat) {
        r.failure = r.clique.has_value() ? "clique exists but solver reported UNSAT"
                                         : "solver reported SAT but no clique exists";
        return r;
    }
    if (r.clique) {
        try {
            Solution witness;
            switch (variant) {
                case Variant::Unbounded:
                    witness = forward_witness_unbounded(inst, meta, *r.clique);
                    break;
                case Variant::Binary:
                    witness = forward_witness_binary(inst, meta, *r.clique);
                    break;
                case Variant::Consensus:
                    witness = forward_witness_consensus(inst, meta, *r.clique);
                    break;
            }
            const Evaluation wev = evaluate(inst, witness);
            long long expected = k - 2;  // unbounded: every distance is k-2
            if (variant == Variant::Binary) expected = static_cast<long long>(g.n) * k - k;
            if (variant == Variant::Consensus) expected = inst.distance_bound;
            if (wev.aggregate != expected)
                throw std::logic_error("unexpected witness aggregate");
        } catch (const std::exception& e) {
            r.failure = std::string("forward witness check failed: ") + e.what();
            return r;
        }
    }
    r.pass = true;
    return r;
}

struct SweepSummary {
    int passes = 0;
    int fails = 0;
    int inconclusives = 0;
    long long nodes_explored = 0;
    long long offsets_pruned = 0;
    std::vector<std::string> lines;           // one `<index> <verdict> ...` per graph
    std::vector<std::string> failing_graphs;  // verbatim graph text per failure
};

namespace detail {

inline void sweep_record(SweepSummary& sum, long long index, const Graph& g,
                         const RoundTripResult& r) {
    std::string line = std::to_string(index);
    line += r.pass ? " pass" : (r.inconclusive ? " inconclusive" : " fail");
    line += r.clique ? " yes" : " no";
    if (r.inconclusive)
        line += " -";
    else
        line += r.verdict == Verdict::Sat ? " yes" : " no";
    line += r.aggregate ? " " + std::to_string(*r.aggregate) : " -";
    sum.lines.push_back(std::move(line));
    sum.nodes_explored += r.nodes_explored;
    sum.offsets_pruned += r.offsets_pruned;
    if (r.pass)
        ++sum.passes;
    else if (r.inconclusive)
        ++sum.inconclusives;
    else {
        ++sum.fails;
        sum.failing_graphs.push_back(serialize_graph(g));
    }
}

}  // namespace detail

// Round trips over every labeled graph on n vertices (no isomorphism
// reduction; correctness over speed at these sizes).
inline SweepSummary sweep_exhaustive(int n, int k, Variant variant,
                                     const SolverLimits& limits = {}) {
    SweepSummary sum;
    const std::uint64_t total = std::uint64_t(1) << choose2(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Graph g = graph_from_edge_mask(n, mask);
        detail::sweep_record(sum, static_cast<long long>(mask), g,
                             round_trip(g, k, variant, limits));
    }
    return sum;
}

inline SweepSummary sweep_random(int n, int count, unsigned seed, int k,
                                 Variant variant, const SolverLimits& limits = {}) {
    SweepSummary sum;
    std::mt19937 rng(seed);
    for (int i = 0; i < count; ++i) {
        const Graph g = random_graph(n, rng);
        detail::sweep_record(sum, i, g, round_trip(g, k, variant, limits));
    }
    return sum;
}

}  // namespace cliquemotif
