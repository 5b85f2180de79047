#pragma once

#include <atomic>
#include <chrono>
#include <climits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cliquemotif/closest_string.hpp"
#include "cliquemotif/instance.hpp"

namespace cliquemotif {

// Leaf strategy thresholds are configuration, not semantics; exceeding all
// strategies is a distinct resource outcome, never a silent UNSAT.
struct SolverLimits {
    long long naive_cap = 1'000'000;   // max A^L for center enumeration leaves
    long long dp_cap = 1'000'000;      // max (d+2)^K column-DP states
    long long branch_cap = 10'000'000; // max branching nodes per leaf
    int threads = 1;
};

enum class Verdict { Sat, Unsat, ResourceLimit };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Sat: return "SAT";
        case Verdict::Unsat: return "UNSAT";
        case Verdict::ResourceLimit: return "RESOURCE";
    }
    return "?";
}

struct SolverReport {
    Verdict verdict = Verdict::Unsat;
    std::optional<Solution> solution;  // present iff Sat
    long long nodes_explored = 0;
    long long offsets_pruned = 0;
    double elapsed_seconds = 0.0;
};

// Per-string admissible offsets after sound pruning.
struct OffsetDomain {
    std::vector<std::vector<int>> offsets;
    long long pruned = 0;
};

// Sound offset pruning against forced strings (strings of length exactly L,
// whose only offset is 0). Under the max metric, a window farther than 2d
// from a forced string cannot share a center with it (triangle inequality);
// under the sum metric the same holds beyond d, because both distances
// contribute to the sum. Strings shorter than L get an empty domain.
inline OffsetDomain prune_offsets(const MotifInstance& inst) {
    const std::size_t L = static_cast<std::size_t>(inst.target_length);
    const long long threshold = inst.metric == Metric::MaxDistance
                                    ? 2LL * inst.distance_bound
                                    : inst.distance_bound;
    std::vector<std::size_t> forced;
    for (std::size_t i = 0; i < inst.strings.size(); ++i)
        if (inst.strings[i].size() == L) forced.push_back(i);

    OffsetDomain dom;
    dom.offsets.resize(inst.strings.size());
    for (std::size_t i = 0; i < inst.strings.size(); ++i) {
        const std::size_t len = inst.strings[i].size();
        if (len < L) continue;
        const std::size_t possible = len - L + 1;
        auto& keep = dom.offsets[i];
        for (std::size_t o = 0; o < possible; ++o) {
            bool ok = true;
            for (std::size_t f : forced) {
                if (static_cast<long long>(hamming(inst.strings[i], o,
                                                   inst.strings[f], 0, L)) > threshold) {
                    ok = false;
                    break;
                }
            }
            if (ok) keep.push_back(static_cast<int>(o));
        }
        dom.pruned += static_cast<long long>(possible) - static_cast<long long>(keep.size());
    }
    return dom;
}

namespace detail {

enum class LeafStatus { Feasible, Infeasible, Aborted };

struct LeafResult {
    LeafStatus status = LeafStatus::Infeasible;
    SymbolString center;
};

struct SubtreeOutcome {
    enum class Kind { Sat, Unsat, Resource, Cancelled };
    Kind kind = Kind::Unsat;
    Solution solution;
    long long nodes = 0;
};

// Depth-first search over offset tuples in lexicographic order. Every
// considered assignment counts as one node; the subtree can be cancelled
// once a lower-index subtree has produced the search outcome.
template <typename AdmitFn, typename LeafFn>
struct TupleDfs {
    const std::vector<std::vector<int>>& domains;
    const AdmitFn& admissible;
    const LeafFn& leaf;
    const std::atomic<long long>* winner;
    long long my_index;
    std::vector<int> chosen;
    long long nodes = 0;
    Solution found;

    enum class Step { Sat, Resource, Exhausted, Cancelled };

    Step dfs(std::size_t depth) {
        if (depth == domains.size()) {
            LeafResult r = leaf(chosen);
            if (r.status == LeafStatus::Aborted) return Step::Resource;
            if (r.status == LeafStatus::Feasible) {
                found.center = std::move(r.center);
                found.offsets = chosen;
                return Step::Sat;
            }
            return Step::Exhausted;
        }
        for (int off : domains[depth]) {
            if (winner && winner->load(std::memory_order_relaxed) < my_index)
                return Step::Cancelled;
            ++nodes;
            if (!admissible(static_cast<int>(depth), off, chosen)) continue;
            chosen.push_back(off);
            const Step s = dfs(depth + 1);
            chosen.pop_back();
            if (s != Step::Exhausted) return s;
        }
        return Step::Exhausted;
    }
};

template <typename AdmitFn, typename LeafFn>
SubtreeOutcome run_subtree(const std::vector<std::vector<int>>& domains,
                           const AdmitFn& admissible, const LeafFn& leaf,
                           int root_offset, const std::atomic<long long>* winner,
                           long long my_index) {
    using Kind = SubtreeOutcome::Kind;
    TupleDfs<AdmitFn, LeafFn> dfs{domains, admissible, leaf, winner, my_index, {}, 0, {}};
    SubtreeOutcome out;
    out.nodes = 1;  // the root assignment itself
    std::vector<int> empty;
    if (!admissible(0, root_offset, empty)) return out;
    dfs.chosen.push_back(root_offset);
    const auto step = dfs.dfs(1);
    out.nodes += dfs.nodes;
    switch (step) {
        case TupleDfs<AdmitFn, LeafFn>::Step::Sat:
            out.kind = Kind::Sat;
            out.solution = std::move(dfs.found);
            break;
        case TupleDfs<AdmitFn, LeafFn>::Step::Resource:
            out.kind = Kind::Resource;
            break;
        case TupleDfs<AdmitFn, LeafFn>::Step::Cancelled:
            out.kind = Kind::Cancelled;
            break;
        case TupleDfs<AdmitFn, LeafFn>::Step::Exhausted:
            out.kind = Kind::Unsat;
            break;
    }
    return out;
}

// Complete search over offset tuples, parallelized across the first
// string's offsets. Subtree results are combined in index order, counting
// nodes only up to the first SAT or resource outcome, so verdict, witness,
// and counters are identical for every thread count (subtrees past an
// earlier outcome may be cancelled; their results are never read).
template <typename AdmitFn, typename LeafFn>
SolverReport run_tuple_search(const MotifInstance& inst, OffsetDomain dom,
                              const AdmitFn& admissible, const LeafFn& leaf,
                              int threads) {
    using Kind = SubtreeOutcome::Kind;
    const auto t0 = std::chrono::steady_clock::now();
    SolverReport rep;
    rep.offsets_pruned = dom.pruned;

    if (inst.strings.empty()) {
        rep.verdict = Verdict::Sat;
        rep.solution = Solution{SymbolString::zeros(static_cast<std::size_t>(inst.target_length)), {}};
        rep.elapsed_seconds = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t0).count();
        return rep;
    }

    const std::vector<int>& roots = dom.offsets[0];
    std::vector<SubtreeOutcome> results(roots.size());
    const int workers =
        std::max(1, std::min<int>(threads, static_cast<int>(roots.size())));

    if (workers <= 1) {
        for (std::size_t idx = 0; idx < roots.size(); ++idx) {
            results[idx] = run_subtree(dom.offsets, admissible, leaf,
                                       roots[idx], nullptr, 0);
            if (results[idx].kind == Kind::Sat || results[idx].kind == Kind::Resource) {
                results.resize(idx + 1);
                break;
            }
        }
    } else {
        std::atomic<long long> next{0};
        std::atomic<long long> winner{LLONG_MAX};
        auto work = [&] {
            while (true) {
                const long long i = next.fetch_add(1);
                if (i >= static_cast<long long>(roots.size())) break;
                if (winner.load(std::memory_order_relaxed) < i) {
                    results[static_cast<std::size_t>(i)].kind = Kind::Cancelled;
                    continue;
                }
                auto out = run_subtree(dom.offsets, admissible, leaf,
                                       roots[static_cast<std::size_t>(i)], &winner, i);
                if (out.kind == Kind::Sat || out.kind == Kind::Resource) {
                    long long cur = winner.load();
                    while (i < cur && !winner.compare_exchange_weak(cur, i)) {
                    }
                }
                results[static_cast<std::size_t>(i)] = std::move(out);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers) - 1);
        for (int w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
    }

    for (const SubtreeOutcome& out : results) {
        if (out.kind == Kind::Cancelled)
            throw std::logic_error("tuple search: cancelled subtree reached while combining");
        rep.nodes_explored += out.nodes;
        if (out.kind == Kind::Sat) {
            rep.verdict = Verdict::Sat;
            rep.solution = out.solution;
            break;
        }
        if (out.kind == Kind::Resource) {
            rep.verdict = Verdict::ResourceLimit;
            break;
        }
    }

    if (rep.verdict == Verdict::Sat) {
        if (!evaluate(inst, *rep.solution).feasible)
            throw std::logic_error("tuple search: SAT witness failed evaluation");
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// A^L with saturation just above cap.
inline long long pow_capped(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// Center enumeration over all A^L strings in lexicographic order against
// the fixed windows; returns the first feasible center.
inline LeafResult enumerate_leaf(const MotifInstance& inst,
                                 const std::vector<int>& offsets) {
    const int L = inst.target_length;
    const int d = inst.distance_bound;
    const Symbol top = static_cast<Symbol>(inst.alphabet_size - 1);
    std::vector<std::vector<Symbol>> windows;
    windows.reserve(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i)
        windows.push_back(inst.strings[i]
                              .substr(static_cast<std::size_t>(offsets[i]),
                                      static_cast<std::size_t>(L))
                              .to_symbols());
    std::vector<Symbol> cur(static_cast<std::size_t>(L), 0);
    while (true) {
        bool ok = true;
        for (const auto& w : windows) {
            int dist = 0;
            for (int c = 0; c < L && dist <= d; ++c)
                dist += cur[static_cast<std::size_t>(c)] != w[static_cast<std::size_t>(c)];
            if (dist > d) {
                ok = false;
                break;
            }
        }
        if (ok) return {LeafStatus::Feasible, SymbolString(cur)};
        int p = L - 1;
        while (p >= 0 && cur[static_cast<std::size_t>(p)] == top) {
            cur[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0) return {};
        ++cur[static_cast<std::size_t>(p)];
    }
}

// Column-wise plurality center of the selected windows and the resulting
// sum of distances; ties go to the smallest symbol id.
inline std::pair<long long, std::vector<Symbol>> plurality_of_windows(
    const MotifInstance& inst, const std::vector<int>& offsets,
    std::size_t count, bool build_center) {
    const std::size_t L = static_cast<std::size_t>(inst.target_length);
    std::vector<Symbol> center;
    if (build_center) center.resize(L);
    std::vector<Symbol> column(count);
    long long cost = 0;
    for (std::size_t c = 0; c < L; ++c) {
        for (std::size_t i = 0; i < count; ++i)
            column[i] = inst.strings[i][static_cast<std::size_t>(offsets[i]) + c];
        std::sort(column.begin(), column.end());
        Symbol best = column.empty() ? Symbol(0) : column[0];
        std::size_t best_count = 0;
        std::size_t i = 0;
        while (i < column.size()) {
            std::size_t j = i;
            while (j < column.size() && column[j] == column[i]) ++j;
            if (j - i > best_count) {
                best_count = j - i;
                best = column[i];
            }
            i = j;
        }
        cost += static_cast<long long>(count - best_count);
        if (build_center) center[c] = best;
    }
    return {cost, std::move(center)};
}

}  // namespace detail

// Exact Closest Substring decision (max metric): complete lexicographic
// search over pruned offset tuples; partial tuples are kept only while all
// chosen windows are pairwise within 2d (a necessary condition that is
// always re-decided at the leaf). Leaves are decided by center enumeration
// when A^L fits naive_cap, else by the column DP when A = 2 and the state
// space fits dp_cap, else by capped branching.
inline SolverReport closest_substring_exact(const MotifInstance& inst,
                                            const SolverLimits& limits = {}) {
    if (inst.metric != Metric::MaxDistance)
        throw std::invalid_argument("closest_substring_exact: metric must be max");
    const std::size_t L = static_cast<std::size_t>(inst.target_length);
    const long long pair_bound = 2LL * inst.distance_bound;
    OffsetDomain dom = prune_offsets(inst);

    const auto admissible = [&](int depth, int off, const std::vector<int>& chosen) {
        for (int j = 0; j < depth; ++j) {
            if (static_cast<long long>(hamming(
                    inst.strings[static_cast<std::size_t>(depth)],
                    static_cast<std::size_t>(off),
                    inst.strings[static_cast<std::size_t>(j)],
                    static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)]),
                    L)) > pair_bound)
                return false;
        }
        return true;
    };

    enum class Strategy { Enumerate, ColumnDp, Branch };
    Strategy strategy = Strategy::Branch;
    if (detail::pow_capped(inst.alphabet_size, inst.target_length, limits.naive_cap) <=
        limits.naive_cap)
        strategy = Strategy::Enumerate;
    else if (inst.alphabet_size == 2 &&
             detail::pow_capped(inst.distance_bound + 2, inst.string_count(),
                                limits.dp_cap) <= limits.dp_cap)
        strategy = Strategy::ColumnDp;

    const auto leaf = [&](const std::vector<int>& offsets) -> detail::LeafResult {
        if (strategy == Strategy::Enumerate) return detail::enumerate_leaf(inst, offsets);
        std::vector<SymbolString> windows;
        windows.reserve(offsets.size());
        for (std::size_t i = 0; i < offsets.size(); ++i)
            windows.push_back(
                inst.strings[i].substr(static_cast<std::size_t>(offsets[i]), L));
        if (strategy == Strategy::ColumnDp) {
            auto center = detail::column_dp_run(windows, inst.distance_bound, limits.dp_cap);
            if (center) return {detail::LeafStatus::Feasible, std::move(*center)};
            return {};
        }
        auto res = detail::branch_capped(windows, inst.distance_bound, limits.branch_cap);
        if (res.status == detail::BranchStatus::Aborted)
            return {detail::LeafStatus::Aborted, {}};
        if (res.status == detail::BranchStatus::Found)
            return {detail::LeafStatus::Feasible, SymbolString(res.center)};
        return {};
    };

    return detail::run_tuple_search(inst, std::move(dom), admissible, leaf,
                                    limits.threads);
}

// Exact Consensus Patterns decision (sum metric): branch and bound over
// pruned offset tuples in lexicographic order. The exact consensus cost of
// the chosen prefix is monotone nondecreasing as strings are added, so any
// prefix exceeding d is pruned; full tuples are decided by the plurality
// center.
inline SolverReport consensus_exact(const MotifInstance& inst,
                                    const SolverLimits& limits = {}) {
    if (inst.metric != Metric::SumDistance)
        throw std::invalid_argument("consensus_exact: metric must be sum");
    OffsetDomain dom = prune_offsets(inst);

    const auto admissible = [&](int depth, int off, const std::vector<int>& chosen) {
        std::vector<int> sel(chosen.begin(), chosen.end());
        sel.push_back(off);
        const auto [cost, center] = detail::plurality_of_windows(
            inst, sel, static_cast<std::size_t>(depth) + 1, false);
        return cost <= inst.distance_bound;
    };

    const auto leaf = [&](const std::vector<int>& offsets) -> detail::LeafResult {
        auto [cost, center] =
            detail::plurality_of_windows(inst, offsets, offsets.size(), true);
        if (cost <= inst.distance_bound)
            return {detail::LeafStatus::Feasible, SymbolString(center)};
        return {};
    };

    return detail::run_tuple_search(inst, std::move(dom), admissible, leaf,
                                    limits.threads);
}

// Exhaustive oracle: enumerates every center in Sigma^L (lexicographic),
// scanning all offsets per string for the best match under the metric.
// Used to cross-validate the main solvers; refuses instances with
// A^L > cap.
inline SolverReport naive_center_oracle(const MotifInstance& inst,
                                        long long cap = 1'000'000) {
    const auto t0 = std::chrono::steady_clock::now();
    SolverReport rep;
    if (detail::pow_capped(inst.alphabet_size, inst.target_length, cap) > cap) {
        rep.verdict = Verdict::ResourceLimit;
        return rep;
    }
    const std::size_t L = static_cast<std::size_t>(inst.target_length);
    const int d = inst.distance_bound;
    for (const auto& s : inst.strings) {
        if (s.size() < L) {
            rep.verdict = Verdict::Unsat;
            rep.elapsed_seconds = std::chrono::duration<double>(
                                      std::chrono::steady_clock::now() - t0).count();
            return rep;
        }
    }
    const Symbol top = static_cast<Symbol>(inst.alphabet_size - 1);
    std::vector<Symbol> cur(L, 0);
    while (true) {
        ++rep.nodes_explored;
        const SymbolString center{cur};
        long long aggregate = 0;
        std::vector<int> offsets;
        offsets.reserve(inst.strings.size());
        bool ok = true;
        for (const auto& s : inst.strings) {
            int best = INT_MAX;
            int best_off = 0;
            for (std::size_t o = 0; o + L <= s.size(); ++o) {
                const int dist = static_cast<int>(hamming(center, 0, s, o, L));
                if (dist < best) {
                    best = dist;
                    best_off = static_cast<int>(o);
                }
            }
            offsets.push_back(best_off);
            if (inst.metric == Metric::MaxDistance) {
                if (best > d) {
                    ok = false;
                    break;
                }
            } else {
                aggregate += best;
                if (aggregate > d) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            rep.verdict = Verdict::Sat;
            rep.solution = Solution{center, std::move(offsets)};
            break;
        }
        int p = static_cast<int>(L) - 1;
        while (p >= 0 && cur[static_cast<std::size_t>(p)] == top) {
            cur[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0) break;
        ++cur[static_cast<std::size_t>(p)];
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Plain-text report: verdict line, then center and offsets in MSI-style
// lines (SAT only), then counters as `# key value` comments. Wall time is
// deliberately not part of the serialized form.
inline std::string serialize_report(const SolverReport& rep) {
    std::string out = verdict_name(rep.verdict);
    out += '\n';
    if (rep.verdict == Verdict::Sat && rep.solution) {
        const SymbolString& c = rep.solution->center;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(c[i]);
        }
        out += '\n';
        for (std::size_t i = 0; i < rep.solution->offsets.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(rep.solution->offsets[i]);
        }
        out += '\n';
    }
    out += "# nodes_explored " + std::to_string(rep.nodes_explored) + "\n";
    out += "# offsets_pruned " + std::to_string(rep.offsets_pruned) + "\n";
    return out;
}

}  // namespace cliquemotif
