// Base-c numeration: word values, canonical representations, fixed-length
// window representations over the extended digit set {0,...,2c}, and the
// digit-set change of automata in both directions.
#pragma once

#include "cobham/bigint.hpp"
#include "cobham/dfao.hpp"

namespace cobham {

/// Contiguous digit set {0,...,max_digit} for a base. The extended set used
/// by the certificate pipeline is {0,...,2*base}.
struct DigitSet {
    unsigned base = 2;
    Digit max_digit = 1;
};

/// Throws InvalidArgumentError unless base >= 2 and max_digit >= base-1.
void validate_digit_set(const DigitSet& ds);

inline DigitSet canonical_digit_set(unsigned base) { return {base, base - 1}; }
inline DigitSet extended_digit_set(unsigned base) { return {base, 2 * base}; }

/// Value of a digit word, most significant first; digits above base are
/// allowed. The empty word evaluates to 0.
Int eval_word(const Word& word, unsigned base);

/// The unique word over {0,...,base-1} without leading zeros whose value is
/// x; empty for x = 0.
Word canonical_repr(const Int& x, unsigned base);

/// A word of length exactly `length` over {0,...,2*base} with value z,
/// chosen greedily (largest feasible digit first). Requires
/// ds.max_digit == 2*base and 0 <= z <= 2*base^length; throws
/// WindowOverflowError otherwise.
Word represent_in_window(const Int& z, unsigned base, std::size_t length, const DigitSet& ds);

/// Digit-set extension: from a machine over canonical digits, a machine over
/// {0,...,ds.max_digit} computing the same sequence (its output on any word w
/// equals the original sequence at the value of w). Built as
/// reverse -> carry product -> reverse, then the initial state is freshened
/// so the leading-zero convention holds and unreachable states are pruned.
Dfao extend_digits(const Dfao& m, const DigitSet& ds,
                   std::size_t state_cap = kDefaultReverseCap);

/// Digit-set restriction: drops transitions on digits above ds.max_digit.
/// The digits of ds must all be present in m's alphabet.
Dfao restrict_digits(const Dfao& m, const DigitSet& ds);

}  // namespace cobham
