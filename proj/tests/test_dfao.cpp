#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobham/dfao.hpp"
#include "cobham/errors.hpp"
#include "cobham/io.hpp"
#include "cobham/numeration.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace cobham;
using namespace cobham::testing;

namespace {

Dfao parity() { return build_periodic_dfao({}, {"e", "o"}, 2); }

// Transient initial state: once a nonzero digit is read, state 0 is never
// re-entered, so only x = 0 maps to it.
Dfao transient_initial() {
    Dfao m;
    m.base = 2;
    m.alphabet = {0, 1};
    m.initial = 0;
    m.outputs = {"a", "b", "c"};
    //            d=0 d=1
    m.transitions = {0, 1,   // state 0
                     2, 1,   // state 1
                     1, 2};  // state 2
    validate_dfao(m);
    return m;
}

}  // namespace

TEST_CASE("run on the empty word stays at the initial state") {
    const Dfao m = parity();
    CHECK(run(m, {}) == m.initial);
}

TEST_CASE("run of [1,0,1] on the parity machine lands on the odd state") {
    const Dfao m = parity();
    CHECK(m.outputs[run(m, {1, 0, 1})] == "o");
}

TEST_CASE("run matches a hand trace of the saved three-state fixture") {
    const Dfao m = load_dfao_file(std::string(FIXTURE_DIR) + "/threestate.dfao");
    REQUIRE(m.state_count() == 3);
    // Hand trace over the file's table: 0 --2--> 2 --1--> 2.
    CHECK(run(m, {2, 1}) == 2);
    CHECK(m.outputs[run(m, {2, 1})] == "r");
}

TEST_CASE("run rejects digits outside the alphabet, naming position and digit") {
    const Dfao m = parity();
    CHECK_THROWS_WITH_AS(run(m, {1, 5, 0}), doctest::Contains("digit 5"), InvalidDigitError);
    CHECK_THROWS_WITH_AS(run(m, {1, 5, 0}), doctest::Contains("position 1"), InvalidDigitError);
}

TEST_CASE("evaluate on the parity machine") {
    const Dfao m = parity();
    CHECK(evaluate(m, 0) == "e");
    CHECK(evaluate(m, 5) == "o");
}

TEST_CASE("evaluate at a large index equals the defining table") {
    const std::vector<std::string> pre{"3"}, per{"1", "2"};
    const Dfao m = build_periodic_dfao(pre, per, 2);
    const Int x = 1'000'000;
    CHECK(evaluate(m, x) == periodic_table_value(pre, per, x));
    // spot checks across the whole prefix
    for (Int y = 0; y < 300; ++y) {
        CHECK(evaluate(m, y) == periodic_table_value(pre, per, y));
    }
}

TEST_CASE("fold associativity: run(uv) == run_from(run(u), v)") {
    const Dfao fixture = build_periodic_dfao({"x", "y"}, {"0", "1", "2"}, 3);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Word u(rng() % 8), v(rng() % 8);
        for (auto& d : u) d = static_cast<Digit>(rng() % 3);
        for (auto& d : v) d = static_cast<Digit>(rng() % 3);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(run(fixture, uv) == run_from(fixture, run(fixture, u), v));
    }
}

TEST_CASE("leading zeros never change the output") {
    const Dfao machines[] = {parity(), build_periodic_dfao({"3"}, {"1", "2"}, 3),
                             load_dfao_file(std::string(FIXTURE_DIR) + "/threestate.dfao")};
    for (const Dfao& m : machines) {
        for (std::uint64_t x = 0; x < 10'000; ++x) {
            const Word repr = canonical_repr(x, m.base);
            const std::string& expected = m.outputs[run(m, repr)];
            for (std::size_t zeros = 1; zeros <= 3; ++zeros) {
                Word padded(zeros, 0);
                padded.insert(padded.end(), repr.begin(), repr.end());
                if (m.outputs[run(m, padded)] != expected) {
                    CAPTURE(x);
                    REQUIRE(m.outputs[run(m, padded)] == expected);
                }
            }
        }
        CHECK(m.stable_initial());
    }
}

TEST_CASE("infinite_canonical_states: single state machine") {
    const Dfao m = build_periodic_dfao({}, {"k"}, 2);
    REQUIRE(m.state_count() == 1);
    CHECK(infinite_canonical_states(m) == std::vector<State>{0});
}

TEST_CASE("infinite_canonical_states: parity machine keeps both states") {
    CHECK(infinite_canonical_states(parity()) == std::vector<State>{0, 1});
}

TEST_CASE("infinite_canonical_states: transient initial state drops out") {
    const Dfao m = transient_initial();
    // Only x = 0 ends at state 0; states 1 and 2 recur forever.
    CHECK(infinite_canonical_states(m) == std::vector<State>{1, 2});
    // Stabilization check: state 0 never occurs past x = 0.
    const auto table = canonical_state_table(m, 1 << (3 + 1));
    for (std::size_t x = 1; x < table.size(); ++x) CHECK(table[x] != 0);
}

TEST_CASE("infinite_canonical_states agrees with the occurrence oracle on small fixtures") {
    const std::vector<Dfao> fixtures = {
        build_periodic_dfao({}, {"k"}, 2),
        parity(),
        build_periodic_dfao({}, {"a", "b", "c"}, 3),
        build_periodic_dfao({"p"}, {"x", "y"}, 2),
        build_periodic_dfao({"p", "q"}, {"z"}, 3),
        transient_initial(),
    };
    for (const Dfao& m : fixtures) {
        if (m.state_count() > 5 || m.base > 3) continue;
        // s recurs infinitely often iff it occurs for some x >= base^{|S|}
        // (a run that long revisits a state and can be pumped).
        std::uint64_t threshold = 1;
        for (std::size_t i = 0; i < m.state_count(); ++i) threshold *= m.base;
        const auto seen = occurring_states(m, threshold, threshold * m.base * m.base);
        std::vector<State> expected;
        for (State s = 0; s < m.state_count(); ++s) {
            if (seen[s]) expected.push_back(s);
        }
        CHECK(infinite_canonical_states(m) == expected);
    }
}

TEST_CASE("reverse_reading: parity machine read least significant first") {
    const Dfao rev = reverse_reading(parity());
    // 5 fed from the low end: digits 1, 0, 1.
    CHECK(rev.outputs[run(rev, {1, 0, 1})] == "o");
}

TEST_CASE("reverse_reading is output-equivalent on reversed digits") {
    const Dfao m = build_periodic_dfao({"3"}, {"1", "2"}, 2);
    const Dfao rev = reverse_reading(m);
    for (std::uint64_t x = 0; x < 256; ++x) {
        Word repr = canonical_repr(x, 2);
        std::reverse(repr.begin(), repr.end());
        CHECK(rev.outputs[run(rev, repr)] == evaluate(m, x));
    }
}

TEST_CASE("reversing twice restores the original outputs") {
    const Dfao m = build_periodic_dfao({"3"}, {"1", "2"}, 2);
    const Dfao twice = reverse_reading(reverse_reading(m));
    for (std::uint64_t x = 0; x < 256; ++x) {
        CHECK(evaluate(twice, x) == evaluate(m, x));
    }
}

TEST_CASE("reverse_reading output-equivalence over base^8 indices for fixtures") {
    for (unsigned base : {2u, 3u}) {
        const Dfao m = build_periodic_dfao({"3"}, {"1", "2"}, base);
        const Dfao rev = reverse_reading(m);
        std::uint64_t limit = 1;
        for (int i = 0; i < 8; ++i) limit *= base;
        for (std::uint64_t x = 0; x < limit; ++x) {
            Word repr = canonical_repr(x, base);
            std::reverse(repr.begin(), repr.end());
            REQUIRE(rev.outputs[run(rev, repr)] == evaluate(m, x));
        }
    }
}

TEST_CASE("reverse_reading honors the state cap") {
    const Dfao m = build_periodic_dfao({"a", "b", "c", "d"}, {"0", "1", "2", "3", "4"}, 3);
    CHECK_THROWS_AS(reverse_reading(m, 4), ResourceLimitError);
}

TEST_CASE("build_periodic_dfao: constant sequence is a single state") {
    const Dfao m = build_periodic_dfao({}, {"k"}, 5);
    CHECK(m.state_count() == 1);
    for (Int x = 0; x < 50; ++x) CHECK(evaluate(m, x) == "k");
}

TEST_CASE("build_periodic_dfao: alternating tokens give the parity machine") {
    const Dfao m = parity();
    CHECK(m.state_count() == 2);
    const std::vector<std::string> expected{"e", "o", "e", "o", "e", "o", "e", "o"};
    for (std::uint64_t x = 0; x < 8; ++x) CHECK(evaluate(m, x) == expected[x]);
}

TEST_CASE("build_periodic_dfao: preperiod then period in base 3") {
    const Dfao m = build_periodic_dfao({"3"}, {"1", "2"}, 3);
    const std::vector<std::string> expected{"3", "1", "2", "1", "2", "1", "2"};
    for (std::uint64_t x = 0; x < expected.size(); ++x) CHECK(evaluate(m, x) == expected[x]);
}

TEST_CASE("build_periodic_dfao rejects an empty period") {
    CHECK_THROWS_AS(build_periodic_dfao({"p"}, {}, 2), InvalidArgumentError);
}

TEST_CASE("build_periodic_dfao round trip against the defining table") {
    const std::vector<std::string> tokens{"t0", "t1", "t2", "t3", "t4"};
    for (unsigned base : {2u, 3u, 5u}) {
        for (std::size_t r = 0; r <= 4; ++r) {
            for (std::size_t q = 1; q <= 5; ++q) {
                const std::vector<std::string> pre(tokens.begin(), tokens.begin() + r);
                const std::vector<std::string> per(tokens.begin(), tokens.begin() + q);
                const Dfao m = build_periodic_dfao(pre, per, base);
                for (Int x = 0; x < 1000; ++x) {
                    REQUIRE(evaluate(m, x) == periodic_table_value(pre, per, x));
                }
            }
        }
    }
}
