// Deterministic finite automata with output (DFAOs) over base-c digit
// alphabets. A DFAO computes a sequence f by f_x = output of the state
// reached on the canonical base-c digits of x, read most significant first.
//
// Machines are immutable values; every operation here is a pure function, so
// concurrent reads are safe.
#pragma once

#include "cobham/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cobham {

using State = std::uint32_t;
using Digit = std::uint32_t;

/// A finite digit string, most significant digit first. The empty word
/// represents 0.
using Word = std::vector<Digit>;

/// DFAO over a digit alphabet. The alphabet is a sorted duplicate-free set of
/// non-negative digits that contains the canonical digits {0,...,base-1};
/// transitions form a dense state_count x alphabet-size table.
///
/// Machines produced by the loader and the generators additionally satisfy
/// the leading-zero convention transition(initial, 0) = initial, which makes
/// the output invariant under leading zeros. reverse_reading() outputs read
/// words least-significant-digit first and are exempt from that convention
/// (a low-order zero changes the value).
struct Dfao {
    unsigned base = 2;
    std::vector<Digit> alphabet;      // sorted, unique, contains 0..base-1
    State initial = 0;
    std::vector<State> transitions;   // state_count * alphabet.size(), row-major
    std::vector<std::string> outputs; // one token per state

    std::size_t state_count() const { return outputs.size(); }
    std::size_t alphabet_size() const { return alphabet.size(); }

    /// Slot of digit d in the alphabet, or alphabet_size() if absent.
    /// Canonical digits always occupy slots 0..base-1.
    std::size_t digit_slot(Digit d) const;

    bool has_digit(Digit d) const { return digit_slot(d) < alphabet.size(); }

    State step(State s, Digit d) const;

    /// True when transition(initial, 0) == initial.
    bool stable_initial() const;
};

/// Checks the structural invariants (alphabet shape, table sizes, index
/// ranges, and, unless the machine is declared reversed, the leading-zero
/// convention). Throws InvalidArgumentError on the first violation.
void validate_dfao(const Dfao& m, bool require_stable_initial = true);

/// delta(start, word) by left-to-right folding. Throws InvalidDigitError
/// naming the offending position and digit.
State run_from(const Dfao& m, State start, const Word& word);

/// delta(initial, word); run(m, {}) == m.initial.
State run(const Dfao& m, const Word& word);

/// The sequence value f_x: output of the state reached on the canonical
/// base-`m.base` representation of x. x may be arbitrarily large.
const std::string& evaluate(const Dfao& m, const Int& x);

/// States reached by the canonical representations of 0..count-1, computed
/// incrementally (entry x is the canonical-run state of x).
std::vector<State> canonical_state_table(const Dfao& m, std::size_t count);

/// States s for which infinitely many naturals x end their canonical run in
/// s. A state qualifies exactly when it is reachable, through canonical
/// digits and a word with no leading zero, via a path that passes through a
/// cycle; leading zeros are discounted (they do not generate new values).
std::vector<State> infinite_canonical_states(const Dfao& m);

inline constexpr std::size_t kDefaultReverseCap = 1'000'000;

/// Reversed-reading machine: reading the digits of w least significant first
/// it outputs what `m` outputs on w read most significant first. Determinizes
/// over the function space S -> S, materializing reachable maps only; throws
/// ResourceLimitError past `state_cap`.
Dfao reverse_reading(const Dfao& m, std::size_t state_cap = kDefaultReverseCap);

/// Fixture generator: the canonical-digit DFAO of the ultimately periodic
/// sequence with the given preperiod and period tables. Throws
/// InvalidArgumentError when the period is empty or base < 2.
Dfao build_periodic_dfao(const std::vector<std::string>& preperiod,
                         const std::vector<std::string>& period,
                         unsigned base);

}  // namespace cobham
