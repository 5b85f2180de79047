#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquemotif/symbol_string.hpp"

namespace cliquemotif {

namespace detail {

inline void require_equal_lengths(const std::vector<SymbolString>& strings,
                                  const char* who) {
    if (strings.empty())
        throw std::invalid_argument(std::string(who) + ": need at least one string");
    for (const auto& s : strings)
        if (s.size() != strings[0].size())
            throw std::invalid_argument(std::string(who) + ": unequal lengths");
}

enum class BranchStatus { Found, Exhausted, Aborted };

// Fixed-parameter branching for Closest String: candidate starts at
// strings[0] with budget d; at the lowest-index violating string, copy one
// of the first d+1 differing symbols into the candidate and recurse with
// budget-1. Children are tried in increasing position order.
struct BranchSearch {
    const std::vector<std::vector<Symbol>>& strs;
    int d;
    long long node_cap;  // 0 = unlimited
    long long nodes = 0;
    std::vector<Symbol> cand;
    std::vector<int> dist;
    std::vector<Symbol> found;

    BranchStatus run(int budget) {
        ++nodes;
        if (node_cap > 0 && nodes > node_cap) return BranchStatus::Aborted;
        int violating = -1;
        for (std::size_t i = 0; i < strs.size(); ++i) {
            if (dist[i] > d + budget) return BranchStatus::Exhausted;
            if (violating < 0 && dist[i] > d) violating = static_cast<int>(i);
        }
        if (violating < 0) {
            found = cand;
            return BranchStatus::Found;
        }
        const std::vector<Symbol>& target = strs[static_cast<std::size_t>(violating)];
        std::vector<int> positions;
        positions.reserve(static_cast<std::size_t>(d) + 1);
        for (std::size_t p = 0;
             p < cand.size() && static_cast<int>(positions.size()) < d + 1; ++p)
            if (cand[p] != target[p]) positions.push_back(static_cast<int>(p));
        for (int pi : positions) {
            const auto p = static_cast<std::size_t>(pi);
            const Symbol old = cand[p];
            const Symbol sym = target[p];
            cand[p] = sym;
            for (std::size_t i = 0; i < strs.size(); ++i)
                dist[i] += (sym != strs[i][p]) - (old != strs[i][p]);
            const BranchStatus st = run(budget - 1);
            cand[p] = old;
            for (std::size_t i = 0; i < strs.size(); ++i)
                dist[i] += (old != strs[i][p]) - (sym != strs[i][p]);
            if (st != BranchStatus::Exhausted) return st;
        }
        return BranchStatus::Exhausted;
    }
};

struct BranchResult {
    BranchStatus status = BranchStatus::Exhausted;
    std::vector<Symbol> center;
};

inline BranchResult branch_capped(const std::vector<SymbolString>& strings, int d,
                                  long long node_cap) {
    require_equal_lengths(strings, "closest_string_branch");
    if (d < 0) throw std::invalid_argument("closest_string_branch: negative d");
    std::vector<std::vector<Symbol>> mats;
    mats.reserve(strings.size());
    for (const auto& s : strings) mats.push_back(s.to_symbols());
    BranchSearch search{mats, d, node_cap, 0, {}, {}, {}};
    search.cand = mats[0];
    search.dist.resize(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i) {
        int dd = 0;
        for (std::size_t p = 0; p < mats[i].size(); ++p)
            dd += search.cand[p] != mats[i][p];
        search.dist[i] = dd;
    }
    BranchResult res;
    res.status = search.run(d);
    if (res.status == BranchStatus::Found) res.center = std::move(search.found);
    return res;
}

}  // namespace detail

// Returns a center with max Hamming distance <= d to every string, or
// nullopt if none exists. Runs in O(kL + kd * d^d).
inline std::optional<SymbolString> closest_string_branch(
    const std::vector<SymbolString>& strings, int d) {
    const auto res = detail::branch_capped(strings, d, 0);
    if (res.status == detail::BranchStatus::Found) return SymbolString(res.center);
    return std::nullopt;
}

namespace detail {

// Exact Closest String decision for binary strings. Columns are grouped by
// their K-bit pattern; within a group the per-string mismatch cost depends
// only on how many columns get center symbol 1, so a DP over groups with
// per-string mismatch counts saturated at d+1 decides feasibility. The
// center is reconstructed by taking the smallest feasible count per group
// and placing the 1s rightmost within the group.
inline std::optional<SymbolString> column_dp_run(
    const std::vector<SymbolString>& strings, int d, long long state_cap) {
    const int num_strings = static_cast<int>(strings.size());
    const std::size_t length = strings[0].size();
    const long long base = d + 2;
    long long states = 1;
    for (int i = 0; i < num_strings; ++i) {
        if (states > state_cap / base)
            throw std::invalid_argument("closest_string_column_dp: state space exceeds cap");
        states *= base;
    }

    std::vector<std::uint32_t> pattern_of(length);
    for (std::size_t c = 0; c < length; ++c) {
        std::uint32_t p = 0;
        for (int i = 0; i < num_strings; ++i)
            p |= static_cast<std::uint32_t>(strings[static_cast<std::size_t>(i)][c] & 1) << i;
        pattern_of[c] = p;
    }
    std::vector<std::uint32_t> patterns = pattern_of;
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    const int num_groups = static_cast<int>(patterns.size());
    std::vector<std::vector<int>> group_cols(patterns.size());
    for (std::size_t c = 0; c < length; ++c) {
        const auto g = std::lower_bound(patterns.begin(), patterns.end(), pattern_of[c]) -
                       patterns.begin();
        group_cols[static_cast<std::size_t>(g)].push_back(static_cast<int>(c));
    }

    std::vector<long long> pow_base(static_cast<std::size_t>(num_strings) + 1, 1);
    for (int i = 1; i <= num_strings; ++i)
        pow_base[static_cast<std::size_t>(i)] = pow_base[static_cast<std::size_t>(i) - 1] * base;

    const auto transition = [&](long long state, std::uint32_t pattern, int group_size,
                                int z) {
        long long next = 0;
        for (int i = 0; i < num_strings; ++i) {
            long long cnt = (state / pow_base[static_cast<std::size_t>(i)]) % base;
            const int inc = ((pattern >> i) & 1) ? group_size - z : z;
            cnt = std::min<long long>(cnt + inc, d + 1);
            next += cnt * pow_base[static_cast<std::size_t>(i)];
        }
        return next;
    };

    // counts with both z and group_size-z beyond d+1 saturate every string,
    // so only the two end ranges of z can lie on a feasible path
    const auto z_candidates = [&](int group_size) {
        std::vector<int> zs;
        const int lo_hi = std::min(group_size, d + 1);
        zs.reserve(static_cast<std::size_t>(2 * (d + 2)));
        for (int z = 0; z <= lo_hi; ++z) zs.push_back(z);
        for (int z = std::max(lo_hi + 1, group_size - (d + 1)); z <= group_size; ++z)
            zs.push_back(z);
        return zs;
    };

    // forward reachability, one sorted layer of states per group boundary
    std::vector<std::vector<long long>> layers(static_cast<std::size_t>(num_groups) + 1);
    layers[0].push_back(0);
    for (int g = 0; g < num_groups; ++g) {
        const std::uint32_t pattern = patterns[static_cast<std::size_t>(g)];
        const int size = static_cast<int>(group_cols[static_cast<std::size_t>(g)].size());
        const auto zs = z_candidates(size);
        auto& next = layers[static_cast<std::size_t>(g) + 1];
        next.reserve(layers[static_cast<std::size_t>(g)].size());
        for (long long state : layers[static_cast<std::size_t>(g)])
            for (int z : zs) next.push_back(transition(state, pattern, size, z));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
    }

    const auto all_within = [&](long long state) {
        for (int i = 0; i < num_strings; ++i)
            if ((state / pow_base[static_cast<std::size_t>(i)]) % base > d) return false;
        return true;
    };

    bool any_feasible = false;
    for (long long state : layers[static_cast<std::size_t>(num_groups)])
        any_feasible |= all_within(state);
    if (!any_feasible) return std::nullopt;

    // backward pass: feas[g][idx] = layers[g][idx] can still reach a
    // feasible end state
    std::vector<std::vector<std::uint8_t>> feas(layers.size());
    for (std::size_t g = 0; g < layers.size(); ++g) feas[g].assign(layers[g].size(), 0);
    for (std::size_t idx = 0; idx < layers.back().size(); ++idx)
        feas.back()[idx] = all_within(layers.back()[idx]);
    const auto feasible_at = [&](int g, long long state) {
        const auto& lay = layers[static_cast<std::size_t>(g)];
        const auto it = std::lower_bound(lay.begin(), lay.end(), state);
        if (it == lay.end() || *it != state)
            throw std::logic_error("closest_string_column_dp: transition left the layer");
        return feas[static_cast<std::size_t>(g)][static_cast<std::size_t>(it - lay.begin())] != 0;
    };
    for (int g = num_groups - 1; g >= 0; --g) {
        const std::uint32_t pattern = patterns[static_cast<std::size_t>(g)];
        const int size = static_cast<int>(group_cols[static_cast<std::size_t>(g)].size());
        const auto zs = z_candidates(size);
        const auto& lay = layers[static_cast<std::size_t>(g)];
        for (std::size_t idx = 0; idx < lay.size(); ++idx) {
            for (int z : zs) {
                if (feasible_at(g + 1, transition(lay[idx], pattern, size, z))) {
                    feas[static_cast<std::size_t>(g)][idx] = 1;
                    break;
                }
            }
        }
    }

    // forward walk choosing the smallest feasible z per group
    std::vector<Symbol> center(length, 0);
    long long state = 0;
    for (int g = 0; g < num_groups; ++g) {
        const std::uint32_t pattern = patterns[static_cast<std::size_t>(g)];
        const auto& cols = group_cols[static_cast<std::size_t>(g)];
        const int size = static_cast<int>(cols.size());
        int picked = -1;
        for (int z : z_candidates(size)) {
            if (feasible_at(g + 1, transition(state, pattern, size, z))) {
                picked = z;
                break;
            }
        }
        if (picked < 0)
            throw std::logic_error("closest_string_column_dp: reconstruction lost feasibility");
        for (int t = size - picked; t < size; ++t)
            center[static_cast<std::size_t>(cols[static_cast<std::size_t>(t)])] = 1;
        state = transition(state, pattern, size, picked);
    }
    return SymbolString(center);
}

}  // namespace detail

// Exact Closest String decision for binary strings via the column-group
// DP; the state space (d+2)^K must fit under state_cap. Agrees with
// closest_string_branch on the verdict wherever both run.
inline std::optional<SymbolString> closest_string_column_dp(
    const std::vector<SymbolString>& strings, int d, long long state_cap = 1'000'000) {
    detail::require_equal_lengths(strings, "closest_string_column_dp");
    if (d < 0) throw std::invalid_argument("closest_string_column_dp: negative d");
    if (strings.size() > 30)
        throw std::invalid_argument("closest_string_column_dp: too many strings");
    for (const auto& s : strings)
        if (!s.packed())
            throw std::invalid_argument("closest_string_column_dp: strings must be binary");
    return detail::column_dp_run(strings, d, state_cap);
}

// Column-wise plurality center, ties broken toward the smallest symbol id;
// minimizes the sum of Hamming distances to the given strings.
inline SymbolString majority_center(const std::vector<SymbolString>& strings) {
    detail::require_equal_lengths(strings, "majority_center");
    const std::size_t length = strings[0].size();
    std::vector<Symbol> center(length);
    std::vector<Symbol> column(strings.size());
    for (std::size_t c = 0; c < length; ++c) {
        for (std::size_t i = 0; i < strings.size(); ++i) column[i] = strings[i][c];
        std::sort(column.begin(), column.end());
        Symbol best = column[0];
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
        center[c] = best;
    }
    return SymbolString(center);
}

}  // namespace cliquemotif
