// Exact arbitrary-precision integers and rationals used throughout the
// library. All arithmetic that feeds a decision (interval endpoints,
// pigeonhole cells, certificate inequalities) is exact; no floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace cobham {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// base^exp for non-negative integer exponents.
Int pow_int(const Int& base, std::uint64_t exp);

/// Largest integer <= r.
Int floor_rat(const Rat& r);

/// Smallest integer >= r.
Int ceil_rat(const Rat& r);

/// Parses a decimal integer; throws ParseError on junk.
Int parse_int(std::string_view text);

/// Parses "p/q" or a plain integer "p"; throws ParseError on junk or q = 0.
Rat parse_ratio(std::string_view text);

/// Renders a rational as "p/q" ("p" when the denominator is 1).
std::string ratio_to_string(const Rat& r);

/// Uniform integer in [lo, hi], deterministic for a given rng state.
Int uniform_int(std::mt19937_64& rng, const Int& lo, const Int& hi);

}  // namespace cobham
