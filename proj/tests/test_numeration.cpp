#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobham/errors.hpp"
#include "cobham/io.hpp"
#include "cobham/numeration.hpp"
#include "oracles.hpp"

#include <random>

using namespace cobham;
using namespace cobham::testing;

TEST_CASE("eval_word formula instances") {
    CHECK(eval_word({1, 0, 1}, 2) == 5);
    CHECK(eval_word({2, 3}, 2) == 7);  // non-canonical digits
    CHECK(eval_word({}, 2) == 0);
    CHECK(eval_word({}, 7) == 0);
}

TEST_CASE("canonical_repr basics") {
    CHECK(canonical_repr(0, 2).empty());
    CHECK(canonical_repr(5, 2) == Word{1, 0, 1});
}

TEST_CASE("canonical_repr round trips through eval_word") {
    CHECK(eval_word(canonical_repr(Int(1'000'000), 7), 7) == 1'000'000);
    for (unsigned base : {2u, 3u, 5u, 7u}) {
        for (std::uint64_t x = 0; x < 1'000'000; ++x) {
            const Word repr = canonical_repr(x, base);
            const bool ok = (repr.empty() || repr.front() != 0) && eval_word(repr, base) == x;
            if (!ok) {  // assert off the hot path; 4M checked pairs
                CAPTURE(base);
                REQUIRE(eval_word(repr, base) == x);
                REQUIRE(repr.front() != 0);
            }
        }
        CHECK(canonical_repr(0, base).empty());
    }
}

TEST_CASE("canonical_repr round trips at huge sizes") {
    // Exercises the divide-and-conquer path.
    const Int big = pow_int(7, 4001) + pow_int(3, 2000) + 12345;
    for (unsigned base : {2u, 5u}) {
        const Word repr = canonical_repr(big, base);
        CHECK(repr.front() != 0);
        CHECK(eval_word(repr, base) == big);
        CHECK(word_value_oracle(repr, base) == big);
    }
}

TEST_CASE("represent_in_window: zero") {
    CHECK(represent_in_window(0, 2, 1, extended_digit_set(2)) == Word{0});
}

TEST_CASE("represent_in_window produces feasible two-digit windows") {
    // Brute-force oracle over all 25 digit pairs in base 2.
    auto feasible = [](const Int& z) {
        std::vector<Word> hits;
        for (Digit d0 = 0; d0 <= 4; ++d0) {
            for (Digit d1 = 0; d1 <= 4; ++d1) {
                if (Int(2 * d0 + d1) == z) hits.push_back(Word{d0, d1});
            }
        }
        return hits;
    };
    for (Int z : {Int(8), Int(7)}) {
        const auto hits = feasible(z);
        REQUIRE(!hits.empty());
        const Word got = represent_in_window(z, 2, 2, extended_digit_set(2));
        CHECK(std::count(hits.begin(), hits.end(), got) == 1);
        CHECK(eval_word(got, 2) == z);
    }
}

TEST_CASE("every value in the window range has an exact-length word") {
    for (unsigned base : {2u, 3u}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const Int top = 2 * pow_int(base, n);
            for (Int z = 0; z <= top; ++z) {
                const Word w = represent_in_window(z, base, n, extended_digit_set(base));
                REQUIRE(w.size() == n);
                for (Digit d : w) REQUIRE(d <= 2 * base);
                REQUIRE(eval_word(w, base) == z);
            }
        }
    }
}

TEST_CASE("represent_in_window rejects out-of-range values") {
    CHECK_THROWS_AS(represent_in_window(9, 2, 1, extended_digit_set(2)), WindowOverflowError);
    CHECK_THROWS_AS(represent_in_window(-1, 2, 1, extended_digit_set(2)), WindowOverflowError);
}

TEST_CASE("extend_digits: parity machine over {0..4}") {
    const Dfao parity = build_periodic_dfao({}, {"e", "o"}, 2);
    const Dfao ext = extend_digits(parity, extended_digit_set(2));
    CHECK(ext.outputs[run(ext, {3})] == "o");
    CHECK(ext.outputs[run(ext, {2})] == "e");
}

TEST_CASE("extend_digits agrees with the original on canonical inputs") {
    const Dfao m = build_periodic_dfao({"3"}, {"1", "2"}, 3);
    const Dfao ext = extend_digits(m, extended_digit_set(3));
    for (Int x = 0; x < 1000; ++x) CHECK(evaluate(ext, x) == evaluate(m, x));
}

TEST_CASE("extend_digits computes the sequence on every extended word") {
    const Dfao parity = build_periodic_dfao({}, {"e", "o"}, 2);
    const Dfao ext = extend_digits(parity, extended_digit_set(2));
    // Exhaustive over words of length <= 4 over {0..4}.
    Word w;
    auto all_words = [&](auto&& self, std::size_t remaining) -> void {
        REQUIRE(ext.outputs[run(ext, w)] == evaluate(parity, eval_word(w, 2)));
        if (remaining == 0) return;
        for (Digit d = 0; d <= 4; ++d) {
            w.push_back(d);
            self(self, remaining - 1);
            w.pop_back();
        }
    };
    all_words(all_words, 4);
}

TEST_CASE("extend_digits equivalence on random long words") {
    const Dfao m = build_periodic_dfao({"a", "b"}, {"x", "y", "z"}, 3);
    const Dfao ext = extend_digits(m, extended_digit_set(3));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        Word w(1 + rng() % 32);
        for (auto& d : w) d = static_cast<Digit>(rng() % 7);
        REQUIRE(ext.outputs[run(ext, w)] == evaluate(m, eval_word(w, 3)));
    }
}

TEST_CASE("extend_digits to a non-standard width") {
    const Dfao parity = build_periodic_dfao({}, {"e", "o"}, 2);
    const Dfao ext = extend_digits(parity, DigitSet{2, 7});
    for (Digit d = 0; d <= 7; ++d) {
        CHECK(ext.outputs[run(ext, {d})] == evaluate(parity, d));
    }
}

TEST_CASE("extend_digits on a permutation-heavy machine from a file") {
    const Dfao m = load_dfao_file(std::string(FIXTURE_DIR) + "/threestate.dfao");
    const Dfao ext = extend_digits(m, extended_digit_set(3));
    Word w;
    auto sweep = [&](auto&& self, std::size_t remaining) -> void {
        REQUIRE(ext.outputs[run(ext, w)] == evaluate(m, eval_word(w, 3)));
        if (remaining == 0) return;
        for (Digit d = 0; d <= 6; ++d) {
            w.push_back(d);
            self(self, remaining - 1);
            w.pop_back();
        }
    };
    sweep(sweep, 4);
}

TEST_CASE("restrict_digits undoes an extension on canonical indices") {
    const Dfao m = build_periodic_dfao({"3"}, {"1", "2"}, 2);
    const Dfao ext = extend_digits(m, extended_digit_set(2));
    const Dfao back = restrict_digits(ext, canonical_digit_set(2));
    for (Int x = 0; x < 1000; ++x) CHECK(evaluate(back, x) == evaluate(m, x));
}

TEST_CASE("restrict_digits to the full alphabet is the identity") {
    const Dfao m = build_periodic_dfao({"3"}, {"1", "2"}, 2);
    const Dfao ext = extend_digits(m, extended_digit_set(2));
    const Dfao same = restrict_digits(ext, extended_digit_set(2));
    CHECK(same.alphabet == ext.alphabet);
    CHECK(same.transitions == ext.transitions);
    CHECK(same.outputs == ext.outputs);
    CHECK(same.initial == ext.initial);
}

TEST_CASE("restrict_digits below the canonical digits is an error") {
    const Dfao m = build_periodic_dfao({"3"}, {"1", "2"}, 3);
    CHECK_THROWS_AS(restrict_digits(m, DigitSet{3, 1}), InvalidArgumentError);
}

TEST_CASE("digit sets must contain the canonical digits") {
    CHECK_THROWS_AS(validate_digit_set(DigitSet{3, 1}), InvalidArgumentError);
    CHECK_NOTHROW(validate_digit_set(DigitSet{3, 2}));
}
