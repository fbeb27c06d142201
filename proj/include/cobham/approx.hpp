// Multiplicative independence and the constructive power-approximation
// search: exponents m, n with |a^m - b^n| <= eps * b^n, found by the
// pigeonhole argument in exact rational arithmetic.
#pragma once

#include "cobham/bigint.hpp"

#include <cstdint>

namespace cobham {

/// Exponent pair with its tolerance; |a^m - b^n| <= eps * b^n holds exactly.
struct ApproxPair {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    unsigned a = 2;
    unsigned b = 2;
    Rat eps;
};

/// Exact cross-multiplied check of |a^m - b^n| * q <= p * b^n for eps = p/q.
bool satisfies_bound(const ApproxPair& pair);

/// True iff a^m != b^n for all positive m, n. Decided by trial-division
/// factoring: dependent exactly when the prime supports coincide and the
/// exponent vectors are proportional.
bool multiplicatively_independent(std::uint64_t a, std::uint64_t b);

/// When a and b are dependent, the minimal positive (m, n) with a^m == b^n.
/// Throws InvalidArgumentError for independent inputs.
std::pair<std::uint64_t, std::uint64_t> dependence_witness(std::uint64_t a, std::uint64_t b);

inline constexpr std::uint64_t kDefaultApproxCap = 1'000'000;

/// Positive exponents (m, n) with |a^m - b^n| <= eps * b^n, eps > 0.
/// Mirrors the pigeonhole proof: a is replaced by its least power a' >= b,
/// the strictly increasing rationals a'^x * b^(-f_x) in [1, b) are dropped
/// into half-open cells of width eps, and the first revisited cell yields a
/// candidate that is verified exactly before being returned. All comparisons
/// are cross-multiplied integers. `iteration_cap` bounds the scan.
ApproxPair approx_powers(unsigned a, unsigned b, const Rat& eps,
                         std::uint64_t iteration_cap = kDefaultApproxCap);

}  // namespace cobham
