#include <catch2/catch.hpp>

#include "cliquemotif/instance.hpp"
#include "test_util.hpp"

using namespace cliquemotif;

TEST_CASE("hamming distance basics") {
    CHECK(hamming(SymbolString{0, 2, 3, 7}, SymbolString{0, 2, 4, 7}) == 1);
    const SymbolString x{1, 0, 1, 1};
    CHECK(hamming(x, x) == 0);
    CHECK(hamming(SymbolString{0, 0, 0}, SymbolString{1, 1, 1}) == 3);
    CHECK(hamming(SymbolString{}, SymbolString{}) == 0);
    CHECK_THROWS_AS(hamming(SymbolString{0}, SymbolString{0, 1}),
                    std::invalid_argument);
}

TEST_CASE("binary content is stored packed, wider content is not") {
    const SymbolString bin{0, 1, 1, 0};
    CHECK(bin.packed());
    const SymbolString wide{0, 1, 2};
    CHECK_FALSE(wide.packed());
    CHECK(bin[1] == 1);
    CHECK(wide[2] == 2);
    CHECK(SymbolString::zeros(130).packed());
    CHECK(SymbolString::zeros(130).size() == 130);
    CHECK(SymbolString{0, 1, 0}.substr(1, 2) == SymbolString{1, 0});

    // equal content compares equal regardless of construction route
    CHECK(SymbolString::zeros(3) == SymbolString{0, 0, 0});
    CHECK(SymbolString{0, 0} != SymbolString{0, 0, 0});
    CHECK(SymbolString{0, 1} != SymbolString{0, 2});
}

TEST_CASE("windowed hamming matches a plain recount across packed boundaries") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 300; ++iter) {
        const int alphabet = iter % 2 ? 2 : 3;
        const int la = 1 + static_cast<int>(rng() % 200);
        const int lb = 1 + static_cast<int>(rng() % 200);
        const SymbolString a{testutil::random_symbols(rng, la, alphabet)};
        const SymbolString b{testutil::random_symbols(rng, lb, alphabet)};
        const int len = static_cast<int>(rng() % static_cast<unsigned>(std::min(la, lb) + 1));
        const int oa = static_cast<int>(rng() % static_cast<unsigned>(la - len + 1));
        const int ob = static_cast<int>(rng() % static_cast<unsigned>(lb - len + 1));
        std::size_t expect = 0;
        for (int c = 0; c < len; ++c)
            expect += a[static_cast<std::size_t>(oa + c)] != b[static_cast<std::size_t>(ob + c)];
        REQUIRE(hamming(a, static_cast<std::size_t>(oa), b, static_cast<std::size_t>(ob),
                        static_cast<std::size_t>(len)) == expect);
    }
}

TEST_CASE("hamming satisfies the triangle inequality") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 300; ++iter) {
        const int alphabet = 2 + static_cast<int>(rng() % 4);
        const int len = static_cast<int>(rng() % 40);
        const SymbolString a{testutil::random_symbols(rng, len, alphabet)};
        const SymbolString b{testutil::random_symbols(rng, len, alphabet)};
        const SymbolString c{testutil::random_symbols(rng, len, alphabet)};
        REQUIRE(hamming(a, c) <= hamming(a, b) + hamming(b, c));
    }
}

TEST_CASE("evaluate computes per-string distances and the aggregate") {
    SECTION("center equal to a full-length string scores zero there") {
        MotifInstance inst;
        inst.metric = Metric::MaxDistance;
        inst.alphabet_size = 2;
        inst.target_length = 3;
        inst.distance_bound = 1;
        inst.strings = {SymbolString{0, 1, 0}, SymbolString{1, 1, 0, 1}};
        const Solution sol{SymbolString{0, 1, 0}, {0, 1}};
        const Evaluation ev = evaluate(inst, sol);
        CHECK(ev.distances == std::vector<int>{0, 3});
        CHECK(ev.aggregate == 3);
        CHECK_FALSE(ev.feasible);
    }
    SECTION("malformed solutions are rejected") {
        MotifInstance inst;
        inst.target_length = 2;
        inst.strings = {SymbolString{0, 1, 0}};
        CHECK_THROWS_AS(evaluate(inst, Solution{SymbolString{0}, {0}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(evaluate(inst, Solution{SymbolString{0, 1}, {0, 0}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(evaluate(inst, Solution{SymbolString{0, 1}, {2}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(evaluate(inst, Solution{SymbolString{0, 1}, {-1}}),
                        std::invalid_argument);
    }
    SECTION("aggregate equals an independent recount on random solutions") {
        std::mt19937 rng(555);
        for (int iter = 0; iter < 200; ++iter) {
            MotifInstance inst = testutil::random_instance(rng, iter % 2
                                                                    ? Metric::MaxDistance
                                                                    : Metric::SumDistance);
            Solution sol;
            sol.center = SymbolString{
                testutil::random_symbols(rng, inst.target_length, inst.alphabet_size)};
            bool ok = true;
            for (const auto& s : inst.strings) {
                if (s.size() < static_cast<std::size_t>(inst.target_length)) {
                    ok = false;
                    break;
                }
                sol.offsets.push_back(static_cast<int>(
                    rng() % static_cast<unsigned>(s.size() - inst.target_length + 1)));
            }
            if (!ok) continue;
            const Evaluation ev = evaluate(inst, sol);
            const auto recount = testutil::recount_distances(inst, sol);
            REQUIRE(ev.distances == recount);
            long long want = 0;
            for (int d : recount)
                want = inst.metric == Metric::MaxDistance ? std::max<long long>(want, d)
                                                          : want + d;
            REQUIRE(ev.aggregate == want);
            REQUIRE(ev.feasible == (want <= inst.distance_bound));
        }
    }
}

TEST_CASE("MSI serialization matches the documented bytes") {
    MotifInstance inst;
    inst.metric = Metric::MaxDistance;
    inst.alphabet_size = 2;
    inst.target_length = 2;
    inst.distance_bound = 1;
    inst.strings = {SymbolString{0, 1, 0}, SymbolString{1, 1, 1}};
    REQUIRE(serialize_instance(inst) == "MSI max 2 2 2 1\n0 1 0\n1 1 1\n");
    REQUIRE(parse_instance(serialize_instance(inst)) == inst);
}

TEST_CASE("MSI parsing validates symbols with line and column") {
    try {
        parse_instance(std::string("MSI sum 2 1 2 1\n0 3\n"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_instance(std::string("MSI avg 2 1 2 1\n0\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("MSI max 2 2 2 1\n0 1\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("MSI max 2 0 0 1\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("MSI max 2 0 2 -1\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("MSI max 2 1 2 1\n0 x\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("hello\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("MSI max 2 1 2 1\n0 1\njunk\n")),
                    ParseError);
}

TEST_CASE("MSI parse of serialize is the identity on random instances") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 300; ++iter) {
        MotifInstance inst;
        inst.metric = iter % 2 ? Metric::MaxDistance : Metric::SumDistance;
        inst.alphabet_size = 2 + static_cast<int>(rng() % 11);  // 2..12
        inst.target_length = 1 + static_cast<int>(rng() % 6);
        inst.distance_bound = static_cast<int>(rng() % 6);
        const int count = static_cast<int>(rng() % 6);
        for (int i = 0; i < count; ++i)
            inst.strings.emplace_back(testutil::random_symbols(
                rng, static_cast<int>(rng() % 13), inst.alphabet_size));
        REQUIRE(parse_instance(serialize_instance(inst)) == inst);
    }
}

TEST_CASE("MSI parsing is whitespace tolerant within lines") {
    const MotifInstance inst =
        parse_instance(std::string("MSI max 3 1 2 0\n  0\t 2  1 \n"));
    REQUIRE(inst.strings.size() == 1);
    REQUIRE(inst.strings[0] == SymbolString{0, 2, 1});
    // empty line = empty string, as emitted for edgeless reductions
    const MotifInstance empty = parse_instance(std::string("MSI max 2 2 4 1\n\n0 1\n"));
    REQUIRE(empty.strings[0].empty());
    REQUIRE(empty.strings[1] == SymbolString{0, 1});
}
