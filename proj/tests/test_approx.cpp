#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobham/approx.hpp"
#include "cobham/errors.hpp"
#include "oracles.hpp"

using namespace cobham;
using namespace cobham::testing;

TEST_CASE("independence of small pairs") {
    CHECK(multiplicatively_independent(2, 3));
    CHECK_FALSE(multiplicatively_independent(4, 8));  // 4^3 = 8^2 = 64
    CHECK(multiplicatively_independent(6, 12));
    CHECK(dependent_by_scan(6, 12) == false);
}

TEST_CASE("independence agrees with the exhaustive scan on 2..64 x 2..64") {
    for (std::uint64_t a = 2; a <= 64; ++a) {
        for (std::uint64_t b = 2; b <= 64; ++b) {
            REQUIRE(multiplicatively_independent(a, b) == !dependent_by_scan(a, b));
        }
    }
}

TEST_CASE("dependence witness is minimal") {
    const auto [m, n] = dependence_witness(4, 8);
    CHECK(m == 3);
    CHECK(n == 2);
    const auto [m2, n2] = dependence_witness(9, 27);
    CHECK(pow_int(9, m2) == pow_int(27, n2));
    CHECK_THROWS_AS(dependence_witness(2, 3), InvalidArgumentError);
}

TEST_CASE("approx_powers at eps = 1/2") {
    const ApproxPair pair = approx_powers(2, 3, Rat(1, 2));
    CHECK(satisfies_bound(pair));
    // Existence cross-check: some pair with exponents <= 16 works, e.g. (2,1).
    const auto brute = bound_pair_by_scan(2, 3, Rat(1, 2), 16);
    REQUIRE(brute.has_value());
}

TEST_CASE("approx_powers at eps = 1/12 matches the tight picture") {
    const ApproxPair pair = approx_powers(2, 3, Rat(1, 12));
    CHECK(satisfies_bound(pair));
    // The scan oracle finds a valid pair within exponents <= 64; (19,12) is
    // one: |2^19 - 3^12| = 7153 and 7153 * 12 <= 3^12.
    const auto brute = bound_pair_by_scan(2, 3, Rat(1, 12), 64);
    REQUIRE(brute.has_value());
    CHECK(boost::multiprecision::abs(pow_int(2, 19) - pow_int(3, 12)) == 7153);
    CHECK(Int(7153) * 12 <= pow_int(3, 12));
}

TEST_CASE("dependent bases reach an exact power collision") {
    const ApproxPair pair = approx_powers(4, 2, Rat(1, 1000));
    CHECK(satisfies_bound(pair));
    CHECK(pow_int(4, pair.m) == pow_int(2, pair.n));
}

TEST_CASE("returned pairs always pass the exact cross-multiplied bound") {
    for (unsigned a : {2u, 3u, 5u, 6u, 10u}) {
        for (unsigned b : {2u, 3u, 5u, 7u}) {
            for (const Rat& eps : {Rat(1, 2), Rat(1, 7), Rat(1, 30), Rat(3, 100)}) {
                const ApproxPair pair = approx_powers(a, b, eps);
                CAPTURE(a);
                CAPTURE(b);
                REQUIRE(pair.m >= 1);
                REQUIRE(pair.n >= 1);
                REQUIRE(satisfies_bound(pair));
            }
        }
    }
}

TEST_CASE("monotone refinement: a tighter pair satisfies looser bounds") {
    const Rat loose(1, 10), tight(1, 100);
    ApproxPair pair = approx_powers(2, 3, tight);
    CHECK(satisfies_bound(pair));
    pair.eps = loose;
    CHECK(satisfies_bound(pair));
}

TEST_CASE("approx_powers is deterministic") {
    const ApproxPair p1 = approx_powers(3, 5, Rat(1, 50));
    const ApproxPair p2 = approx_powers(3, 5, Rat(1, 50));
    CHECK(p1.m == p2.m);
    CHECK(p1.n == p2.n);
}

TEST_CASE("the iteration cap surfaces as a resource error") {
    CHECK_THROWS_AS(approx_powers(2, 3, Rat(1, 1'000'000), 10), ResourceLimitError);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(approx_powers(1, 3, Rat(1, 2)), InvalidArgumentError);
    CHECK_THROWS_AS(approx_powers(2, 3, Rat(0)), InvalidArgumentError);
    CHECK_THROWS_AS(multiplicatively_independent(1, 5), InvalidArgumentError);
}
