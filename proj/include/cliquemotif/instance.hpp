#pragma once

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cliquemotif/parse_error.hpp"
#include "cliquemotif/symbol_string.hpp"

namespace cliquemotif {

// MaxDistance instances model Closest Substring, SumDistance instances
// model Consensus Patterns.
enum class Metric { MaxDistance, SumDistance };

inline const char* metric_name(Metric m) {
    return m == Metric::MaxDistance ? "max" : "sum";
}

struct MotifInstance {
    Metric metric = Metric::MaxDistance;
    int alphabet_size = 2;              // A
    std::vector<SymbolString> strings;  // K input strings
    int target_length = 1;              // L
    int distance_bound = 0;             // d

    int string_count() const { return static_cast<int>(strings.size()); }

    friend bool operator==(const MotifInstance& a, const MotifInstance& b) {
        return a.metric == b.metric && a.alphabet_size == b.alphabet_size &&
               a.target_length == b.target_length &&
               a.distance_bound == b.distance_bound && a.strings == b.strings;
    }
};

// A center of length L plus one 0-based substring start per input string.
struct Solution {
    SymbolString center;
    std::vector<int> offsets;

    friend bool operator==(const Solution& a, const Solution& b) {
        return a.center == b.center && a.offsets == b.offsets;
    }
};

// Region split of a reduction block: front tag / encoding part / back tag.
struct BlockLayout {
    int front_len = 0;
    int enc_len = 0;
    int back_len = 0;

    int total() const { return front_len + enc_len + back_len; }
};

struct Evaluation {
    std::vector<int> distances;  // per input string
    long long aggregate = 0;     // max or sum of distances
    bool feasible = false;       // aggregate <= d
};

inline Evaluation evaluate(const MotifInstance& inst, const Solution& sol) {
    const std::size_t L = static_cast<std::size_t>(inst.target_length);
    if (sol.center.size() != L)
        throw std::invalid_argument("evaluate: center length differs from L");
    if (sol.offsets.size() != inst.strings.size())
        throw std::invalid_argument("evaluate: offset count differs from K");
    Evaluation ev;
    ev.distances.reserve(inst.strings.size());
    for (std::size_t i = 0; i < inst.strings.size(); ++i) {
        const int off = sol.offsets[i];
        if (off < 0 || static_cast<std::size_t>(off) + L > inst.strings[i].size())
            throw std::invalid_argument("evaluate: offset out of range");
        const int dist = static_cast<int>(
            hamming(sol.center, 0, inst.strings[i], static_cast<std::size_t>(off), L));
        ev.distances.push_back(dist);
        if (inst.metric == Metric::MaxDistance)
            ev.aggregate = std::max<long long>(ev.aggregate, dist);
        else
            ev.aggregate += dist;
    }
    ev.feasible = ev.aggregate <= inst.distance_bound;
    return ev;
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

inline bool whitespace_only(std::string_view line) {
    for (char c : line)
        if (c != ' ' && c != '\t') return false;
    return true;
}

// One line of whitespace-separated decimal symbol ids; positions for error
// reporting are 1-based character columns.
inline std::vector<Symbol> parse_symbol_line(std::string_view line, int line_no,
                                             int alphabet_size) {
    std::vector<Symbol> symbols;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        const std::size_t tok_start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        std::string_view tok = line.substr(tok_start, i - tok_start);
        long long value = -1;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
            throw ParseError(line_no, static_cast<int>(tok_start) + 1,
                             "expected a decimal symbol id");
        if (value >= alphabet_size)
            throw ParseError(line_no, static_cast<int>(tok_start) + 1,
                             "symbol id " + std::to_string(value) +
                                 " out of range for alphabet size " +
                                 std::to_string(alphabet_size));
        symbols.push_back(static_cast<Symbol>(value));
    }
    return symbols;
}

}  // namespace detail

// MSI v1 instance file: header `MSI <max|sum> <A> <K> <L> <d>`, then K lines
// of space-separated decimal symbol ids (one input string per line; an empty
// line is an empty string). Output always ends with a newline.
inline MotifInstance parse_instance(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty()) throw ParseError(1, "empty instance file");

    std::string header(lines[0]);
    std::istringstream hs(header);
    std::string magic, metric_word;
    long long alphabet = 0, count = 0, length = 0, bound = 0;
    if (!(hs >> magic >> metric_word >> alphabet >> count >> length >> bound) ||
        magic != "MSI")
        throw ParseError(1, "malformed header, expected 'MSI <max|sum> <A> <K> <L> <d>'");
    std::string extra;
    if (hs >> extra) throw ParseError(1, "trailing tokens after header");

    MotifInstance inst;
    if (metric_word == "max")
        inst.metric = Metric::MaxDistance;
    else if (metric_word == "sum")
        inst.metric = Metric::SumDistance;
    else
        throw ParseError(1, "metric must be 'max' or 'sum'");
    if (alphabet < 1 || alphabet > 65536)
        throw ParseError(1, "alphabet size out of range");
    if (count < 0) throw ParseError(1, "negative string count");
    if (length < 1) throw ParseError(1, "target length must be positive");
    if (bound < 0) throw ParseError(1, "negative distance bound");
    inst.alphabet_size = static_cast<int>(alphabet);
    inst.target_length = static_cast<int>(length);
    inst.distance_bound = static_cast<int>(bound);

    for (long long i = 0; i < count; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i) + 1;
        if (idx >= lines.size())
            throw ParseError(static_cast<int>(idx) + 1,
                             "missing string line (" + std::to_string(count) +
                                 " declared)");
        inst.strings.emplace_back(detail::parse_symbol_line(
            lines[idx], static_cast<int>(idx) + 1, inst.alphabet_size));
    }
    for (std::size_t idx = static_cast<std::size_t>(count) + 1; idx < lines.size(); ++idx)
        if (!detail::whitespace_only(lines[idx]))
            throw ParseError(static_cast<int>(idx) + 1, "unexpected content after strings");
    return inst;
}

inline std::string serialize_instance(const MotifInstance& inst) {
    std::string out = "MSI ";
    out += metric_name(inst.metric);
    out += ' ';
    out += std::to_string(inst.alphabet_size);
    out += ' ';
    out += std::to_string(inst.strings.size());
    out += ' ';
    out += std::to_string(inst.target_length);
    out += ' ';
    out += std::to_string(inst.distance_bound);
    out += '\n';
    for (const SymbolString& s : inst.strings) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace cliquemotif
