// cliquemotif command line: reduce Clique instances to motif search
// problems, solve them exactly, and verify the clique <-> solvable
// equivalence on graph families.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cliquemotif/harness.hpp"

namespace {

using namespace cliquemotif;

// Exit codes: scripts depend on this vocabulary.
constexpr int kExitOk = 0;          // success / SAT / clique found / pass
constexpr int kExitNegative = 1;    // UNSAT / no clique
constexpr int kExitVerifyFail = 2;  // verification failure or golden drift
constexpr int kExitUsage = 64;      // bad command line
constexpr int kExitFormat = 65;     // unreadable or malformed input file
constexpr int kExitResource = 70;   // solver hit a resource cap

const char* kUsage =
    "usage: cliquemotif <subcommand> [flags]\n"
    "\n"
    "  reduce --variant unbounded|binary|consensus --k <int> --graph <path>\n"
    "         --out <path> [--legend <path>]\n"
    "  solve  --in <path> [--naive] [--naive-cap N] [--dp-cap N] [--threads N]\n"
    "  clique --k <int> --graph <path>\n"
    "  verify --variant <v> --k <int> (--graph <path> | --exhaustive-n <int> |\n"
    "         --random <count> --n <int> --seed <int>)\n"
    "  selftest\n";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> flags;

    bool has(const std::string& name) const {
        for (const auto& [k, v] : flags)
            if (k == name) return true;
        return false;
    }
    std::string get(const std::string& name) const {
        for (const auto& [k, v] : flags)
            if (k == name) return v;
        throw UsageError("missing required flag --" + name);
    }
    long long get_int(const std::string& name) const {
        const std::string v = get(name);
        try {
            std::size_t pos = 0;
            const long long x = std::stoll(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return x;
        } catch (const std::exception&) {
            throw UsageError("flag --" + name + " expects an integer, got '" + v + "'");
        }
    }
    long long get_int_or(const std::string& name, long long fallback) const {
        return has(name) ? get_int(name) : fallback;
    }
};

Args parse_args(int argc, char** argv) {
    static const std::vector<std::string> value_flags = {
        "variant", "k",      "graph", "out",          "legend", "in",
        "naive-cap", "dp-cap", "threads", "exhaustive-n", "random", "n",
        "seed"};
    static const std::vector<std::string> bool_flags = {"naive"};
    Args args;
    for (int i = 2; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--", 0) != 0) {
            args.positional.push_back(a);
            continue;
        }
        const std::string name = a.substr(2);
        bool is_value = false, is_bool = false;
        for (const auto& f : value_flags) is_value |= f == name;
        for (const auto& f : bool_flags) is_bool |= f == name;
        if (is_bool) {
            args.flags.emplace_back(name, "1");
        } else if (is_value) {
            if (i + 1 >= argc) throw UsageError("flag --" + name + " expects a value");
            args.flags.emplace_back(name, argv[++i]);
        } else {
            throw UsageError("unknown flag --" + name);
        }
    }
    if (!args.positional.empty())
        throw UsageError("unexpected argument '" + args.positional[0] + "'");
    return args;
}

Variant parse_variant(const std::string& word) {
    if (word == "unbounded") return Variant::Unbounded;
    if (word == "binary") return Variant::Binary;
    if (word == "consensus") return Variant::Consensus;
    throw UsageError("unknown variant '" + word + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

Graph load_graph(const std::string& path) {
    std::istringstream in(read_file(path));
    return parse_graph(in);
}

std::pair<MotifInstance, ReductionMeta> run_reduction(const Graph& g, int k,
                                                      Variant variant) {
    switch (variant) {
        case Variant::Unbounded: return reduce_unbounded(g, k);
        case Variant::Binary: return reduce_binary(g, k);
        default: return reduce_consensus(g, k);
    }
}

int cmd_reduce(const Args& args) {
    const Variant variant = parse_variant(args.get("variant"));
    const int k = static_cast<int>(args.get_int("k"));
    if (args.has("legend") && variant != Variant::Unbounded)
        throw UsageError("--legend is only meaningful for the unbounded variant");
    const Graph g = load_graph(args.get("graph"));
    const auto [inst, meta] = run_reduction(g, k, variant);
    write_file(args.get("out"), serialize_instance(inst));
    if (args.has("legend")) write_file(args.get("legend"), serialize_legend(meta));
    std::cout << "wrote " << args.get("out") << ": MSI " << metric_name(inst.metric)
              << " " << inst.alphabet_size << " " << inst.string_count() << " "
              << inst.target_length << " " << inst.distance_bound << "\n";
    return kExitOk;
}

int cmd_solve(const Args& args) {
    const MotifInstance inst = parse_instance(read_file(args.get("in")));
    SolverReport rep;
    if (args.has("naive")) {
        rep = naive_center_oracle(inst, args.get_int_or("naive-cap", 1'000'000));
    } else {
        SolverLimits limits;
        limits.naive_cap = args.get_int_or("naive-cap", limits.naive_cap);
        limits.dp_cap = args.get_int_or("dp-cap", limits.dp_cap);
        limits.threads = static_cast<int>(args.get_int_or("threads", 1));
        if (limits.threads < 1) throw UsageError("--threads must be positive");
        rep = inst.metric == Metric::MaxDistance ? closest_substring_exact(inst, limits)
                                                 : consensus_exact(inst, limits);
    }
    std::cout << serialize_report(rep);
    switch (rep.verdict) {
        case Verdict::Sat: return kExitOk;
        case Verdict::Unsat: return kExitNegative;
        case Verdict::ResourceLimit: return kExitResource;
    }
    return kExitOk;
}

int cmd_clique(const Args& args) {
    const int k = static_cast<int>(args.get_int("k"));
    const Graph g = load_graph(args.get("graph"));
    const auto clique = find_clique(g, k);
    if (!clique) {
        std::cout << "no clique of size " << k << "\n";
        return kExitNegative;
    }
    for (std::size_t i = 0; i < clique->size(); ++i)
        std::cout << (i ? " " : "") << (*clique)[i];
    std::cout << "\n";
    return kExitOk;
}

int summarize_sweep(const SweepSummary& sum) {
    for (const auto& line : sum.lines) std::cout << line << "\n";
    std::cout << sum.passes << " pass / " << sum.fails << " fail / "
              << sum.inconclusives << " inconclusive\n";
    std::cout << "# nodes_explored " << sum.nodes_explored << "\n";
    std::cout << "# offsets_pruned " << sum.offsets_pruned << "\n";
    for (const auto& g : sum.failing_graphs) std::cout << "failing graph:\n" << g;
    if (sum.fails > 0) return kExitVerifyFail;
    if (sum.inconclusives > 0) return kExitResource;
    return kExitOk;
}

int cmd_verify(const Args& args) {
    const Variant variant = parse_variant(args.get("variant"));
    const int k = static_cast<int>(args.get_int("k"));
    const int modes = (args.has("graph") ? 1 : 0) + (args.has("exhaustive-n") ? 1 : 0) +
                      (args.has("random") ? 1 : 0);
    if (modes != 1)
        throw UsageError("verify needs exactly one of --graph, --exhaustive-n, --random");
    SweepSummary sum;
    if (args.has("graph")) {
        const Graph g = load_graph(args.get("graph"));
        detail::sweep_record(sum, 0, g, round_trip(g, k, variant));
    } else if (args.has("exhaustive-n")) {
        sum = sweep_exhaustive(static_cast<int>(args.get_int("exhaustive-n")), k, variant);
    } else {
        const int count = static_cast<int>(args.get_int("random"));
        const int n = static_cast<int>(args.get_int("n"));
        const unsigned seed = static_cast<unsigned>(args.get_int("seed"));
        std::cout << "# seed " << seed << "\n";
        sum = sweep_random(n, count, seed, k, variant);
    }
    return summarize_sweep(sum);
}

// Golden vectors for the worked 4-vertex example: edges (1,3), (1,4),
// (2,3), (3,4), clique size 3.
Graph example_graph() {
    return parse_graph(std::string("p edge 4 4\ne 1 3\ne 1 4\ne 2 3\ne 3 4\n"));
}

struct SelfTest {
    int failures = 0;

    void check(bool ok, const std::string& what) {
        std::cout << (ok ? "[ok] " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    }
};

int cmd_selftest(const Args&) {
    SelfTest t;
    const Graph g = example_graph();
    const VertexSet want_clique{1, 3, 4};

    {
        const auto [inst, meta] = reduce_unbounded(g, 3);
        t.check(inst.alphabet_size == 8 && inst.string_count() == 3 &&
                    inst.target_length == 4 && inst.distance_bound == 1,
                "unbounded header MSI max 8 3 4 1");
        bool len25 = true;
        for (const auto& s : inst.strings) len25 &= s.size() == 25;
        t.check(len25, "unbounded choice strings have length 25");
        t.check(unbounded_block(4, 3, 1, 1, 2, {1, 3}) == SymbolString({0, 2, 4, 7}) &&
                    unbounded_block(4, 3, 2, 1, 3, {1, 4}) == SymbolString({0, 5, 3, 7}) &&
                    unbounded_block(4, 3, 3, 2, 3, {3, 4}) == SymbolString({6, 2, 3, 7}),
                "unbounded blocks for edges (1,3)/(1,4)/(3,4)");
        const auto rep = closest_substring_exact(inst);
        t.check(rep.verdict == Verdict::Sat, "unbounded solver reports SAT");
        if (rep.verdict == Verdict::Sat) {
            t.check(rep.solution->center == SymbolString({0, 2, 3, 7}),
                    "unbounded center is sigma1 sigma3 sigma4 #");
            t.check(extract_clique_unbounded(meta, rep.solution->center) == want_clique,
                    "unbounded center decodes to clique {1,3,4}");
        }
        const Solution witness = forward_witness_unbounded(inst, meta, want_clique);
        const Evaluation ev = evaluate(inst, witness);
        t.check(ev.distances == std::vector<int>{1, 1, 1} && ev.aggregate == 1,
                "unbounded witness distances are exactly 1");
    }
    {
        const auto [inst, meta] = reduce_binary(g, 3);
        t.check(inst.target_length == 480 && inst.distance_bound == 9 &&
                    inst.string_count() == 4,
                "binary header MSI max 2 4 480 9");
        const SymbolString front = front_tag(4, 3);
        bool front_ok = front.size() == 444;
        for (std::size_t i = 0; front_ok && i < front.size(); ++i)
            front_ok = front[i] == ((i + 1) % 37 != 0);
        t.check(front_ok, "binary front tag is (1^36 0)^12");
        const Solution witness = forward_witness_binary(inst, meta, want_clique);
        const Evaluation ev = evaluate(inst, witness);
        t.check(ev.distances == std::vector<int>{9, 9, 9, 9},
                "binary witness distances are exactly 9");
        const auto rep = closest_substring_exact(inst);
        t.check(rep.verdict == Verdict::Sat, "binary solver reports SAT");
        if (rep.verdict == Verdict::Sat)
            t.check(extract_clique_binary(meta, rep.solution->center) == want_clique,
                    "binary center decodes to clique {1,3,4}");
    }
    if (t.failures == 0) {
        std::cout << "selftest: all checks passed\n";
        return kExitOk;
    }
    std::cout << "selftest: " << t.failures << " check(s) failed\n";
    return kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        if (argc < 2) throw UsageError("missing subcommand");
        const std::string cmd = argv[1];
        const Args args = parse_args(argc, argv);
        if (cmd == "reduce") return cmd_reduce(args);
        if (cmd == "solve") return cmd_solve(args);
        if (cmd == "clique") return cmd_clique(args);
        if (cmd == "verify") return cmd_verify(args);
        if (cmd == "selftest") return cmd_selftest(args);
        throw UsageError("unknown subcommand '" + cmd + "'");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << kUsage;
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
