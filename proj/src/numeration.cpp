#include "cobham/numeration.hpp"

#include "cobham/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace cobham {

void validate_digit_set(const DigitSet& ds) {
    if (ds.base < 2) throw InvalidArgumentError("digit set: base must be at least 2");
    if (ds.max_digit >= (Digit{1} << 24)) {
        throw InvalidArgumentError("digit set: max digit too large");
    }
    if (ds.max_digit + 1 < ds.base) {
        throw InvalidArgumentError("digit set: must contain the canonical digits 0.." +
                                   std::to_string(ds.base - 1));
    }
}

Int eval_word(const Word& word, unsigned base) {
    if (base < 2) throw InvalidArgumentError("eval_word: base must be at least 2");
    Int value = 0;
    for (Digit d : word) {
        value *= base;
        value += d;
    }
    return value;
}

namespace {

// Emits exactly `count` digits of x (leading zeros kept), splitting at
// power-of-two digit counts so huge values convert in softly-linear time
// instead of one division per digit.
void repr_fixed(const Int& x, std::size_t count, unsigned base,
                const std::vector<Int>& pow2, Word& out) {
    if (count <= 32) {
        const std::size_t at = out.size();
        out.resize(at + count, 0);
        Int rest = x;
        for (std::size_t i = 0; rest != 0; ++i) {
            Int quotient, remainder;
            boost::multiprecision::divide_qr(rest, Int(base), quotient, remainder);
            out[at + count - 1 - i] = static_cast<Digit>(remainder);
            rest = std::move(quotient);
        }
        return;
    }
    std::size_t level = 0;
    while ((std::size_t{2} << level) < count) ++level;  // 2^level = largest power < count
    const std::size_t low = std::size_t{1} << level;
    Int quotient, remainder;
    boost::multiprecision::divide_qr(x, pow2[level], quotient, remainder);
    repr_fixed(quotient, count - low, base, pow2, out);
    repr_fixed(remainder, low, base, pow2, out);
}

}  // namespace

Word canonical_repr(const Int& x, unsigned base) {
    if (base < 2) throw InvalidArgumentError("canonical_repr: base must be at least 2");
    if (x < 0) throw InvalidArgumentError("canonical_repr: value must be a natural number");
    if (x == 0) return {};

    // Powers b^(2^i) up to the first that exceeds x.
    std::vector<Int> pow2{Int(base)};
    while (pow2.back() <= x) pow2.push_back(pow2.back() * pow2.back());

    Word digits;
    Int head = x;
    std::vector<std::pair<Int, std::size_t>> low_parts;  // (remainder, digit count)
    for (std::size_t i = pow2.size(); i-- > 0;) {
        if (pow2[i] <= head) {
            Int quotient, remainder;
            boost::multiprecision::divide_qr(head, pow2[i], quotient, remainder);
            low_parts.emplace_back(std::move(remainder), std::size_t{1} << i);
            head = std::move(quotient);
        }
    }
    // head is now the leading digit; the low parts follow, widest last.
    digits.push_back(static_cast<Digit>(head));
    for (auto it = low_parts.rbegin(); it != low_parts.rend(); ++it) {
        repr_fixed(it->first, it->second, base, pow2, digits);
    }
    return digits;
}

Word represent_in_window(const Int& z, unsigned base, std::size_t length, const DigitSet& ds) {
    validate_digit_set(ds);
    if (ds.base != base || ds.max_digit != 2 * base) {
        throw InvalidArgumentError("represent_in_window: digit set must be {0,...,2*base}");
    }
    if (length == 0) throw InvalidArgumentError("represent_in_window: length must be positive");
    const Digit top = 2 * base;
    if (z < 0 || z > 2 * pow_int(base, length)) {
        throw WindowOverflowError("represent_in_window: value " + z.str() +
                                  " outside [0, 2*" + std::to_string(base) + "^" +
                                  std::to_string(length) + "]");
    }

    // Greedy most-significant first: the largest digit whose residual both
    // stays non-negative and still fits in the remaining positions.
    Word word(length);
    Int residual = z;
    Int place = pow_int(base, length - 1);          // base^k for k remaining positions
    for (std::size_t i = 0; i < length; ++i) {
        const std::size_t remaining = length - 1 - i;
        const Int cap = top * (pow_int(base, remaining) - 1) / (base - 1);
        Int d = residual / place;
        if (d > top) d = top;
        if (residual - d * place > cap) {
            throw WindowOverflowError("represent_in_window: no feasible digit at position " +
                                      std::to_string(i));
        }
        word[i] = static_cast<Digit>(d);
        residual -= d * place;
        place /= base;
    }
    return word;
}

namespace {

// Carry channel over the reversed machine: reading extended digit d with
// pending carry k emits the canonical digit (d+k) mod base into the reversed
// machine and keeps carry (d+k)/base. States are discovered lazily.
Dfao carry_product(const Dfao& reversed, Digit max_digit) {
    const unsigned base = reversed.base;
    const Digit carry_bound =
        static_cast<Digit>((max_digit + base - 2) / (base - 1));  // ceil(max/(base-1))

    std::map<std::pair<State, Digit>, State> seen;
    std::vector<std::pair<State, Digit>> nodes;
    seen.emplace(std::make_pair(reversed.initial, 0u), 0);
    nodes.emplace_back(reversed.initial, 0u);

    Dfao out;
    out.base = base;
    out.alphabet.resize(max_digit + 1);
    for (Digit d = 0; d <= max_digit; ++d) out.alphabet[d] = d;
    out.initial = 0;

    for (std::size_t id = 0; id < nodes.size(); ++id) {
        for (Digit d = 0; d <= max_digit; ++d) {
            const auto [r, k] = nodes[id];
            const Digit total = d + k;
            const State next_r = reversed.step(r, total % base);
            const Digit next_k = total / base;
            if (next_k > carry_bound) {
                throw InvalidArgumentError("extend_digits: carry bound exceeded");
            }
            auto [it, inserted] = seen.emplace(std::make_pair(next_r, next_k),
                                               static_cast<State>(nodes.size()));
            if (inserted) nodes.emplace_back(next_r, next_k);
            out.transitions.push_back(it->second);
        }
    }

    // End of input: flush the residual carry's canonical digits, least
    // significant first, through the reversed machine.
    out.outputs.reserve(nodes.size());
    for (auto [r, k] : nodes) {
        State s = r;
        Digit rest = k;
        while (rest > 0) {
            s = reversed.step(s, rest % base);
            rest /= base;
        }
        out.outputs.push_back(reversed.outputs[s]);
    }
    validate_dfao(out, /*require_stable_initial=*/false);
    return out;
}

// Unreachable-state pruning with BFS renumbering (initial becomes state 0).
Dfao prune_reachable(const Dfao& m) {
    const std::size_t width = m.alphabet.size();
    std::vector<State> renumber(m.state_count(), UINT32_MAX);
    std::vector<State> order;
    renumber[m.initial] = 0;
    order.push_back(m.initial);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (std::size_t slot = 0; slot < width; ++slot) {
            const State target = m.transitions[static_cast<std::size_t>(order[head]) * width + slot];
            if (renumber[target] == UINT32_MAX) {
                renumber[target] = static_cast<State>(order.size());
                order.push_back(target);
            }
        }
    }
    Dfao out;
    out.base = m.base;
    out.alphabet = m.alphabet;
    out.initial = 0;
    out.outputs.reserve(order.size());
    out.transitions.reserve(order.size() * width);
    for (State old : order) {
        out.outputs.push_back(m.outputs[old]);
        for (std::size_t slot = 0; slot < width; ++slot) {
            out.transitions.push_back(renumber[m.transitions[static_cast<std::size_t>(old) * width + slot]]);
        }
    }
    return out;
}

// Moore partition refinement: merges states with identical output behavior
// under every continuation. The pipeline needs the reduction; without it the
// reverse-carry-reverse composition splits behavior classes into many copies
// and the downstream witness search slows to a crawl. Merging preserves the
// leading-zero convention: the class of the initial state is fixed by 0.
Dfao merge_equivalent_states(const Dfao& m) {
    const std::size_t count = m.state_count();
    const std::size_t width = m.alphabet.size();

    // Initial partition by output token, ids in first-occurrence order.
    std::vector<std::uint32_t> cls(count);
    {
        std::map<std::string, std::uint32_t> ids;
        for (std::size_t s = 0; s < count; ++s) {
            cls[s] = ids.emplace(m.outputs[s], static_cast<std::uint32_t>(ids.size()))
                         .first->second;
        }
    }

    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> next(count);
        std::vector<std::uint32_t> signature(width + 1);
        for (std::size_t s = 0; s < count; ++s) {
            signature[0] = cls[s];
            for (std::size_t slot = 0; slot < width; ++slot) {
                signature[slot + 1] = cls[m.transitions[s * width + slot]];
            }
            next[s] = ids.emplace(signature, static_cast<std::uint32_t>(ids.size()))
                          .first->second;
        }
        const std::size_t refined = ids.size();
        cls.swap(next);
        if (refined == classes) break;
        classes = refined;
    }

    Dfao out;
    out.base = m.base;
    out.alphabet = m.alphabet;
    out.initial = cls[m.initial];
    out.outputs.resize(classes);
    out.transitions.resize(classes * width);
    std::vector<bool> filled(classes, false);
    for (std::size_t s = 0; s < count; ++s) {
        if (filled[cls[s]]) continue;
        filled[cls[s]] = true;
        out.outputs[cls[s]] = m.outputs[s];
        for (std::size_t slot = 0; slot < width; ++slot) {
            out.transitions[cls[s] * width + slot] = cls[m.transitions[s * width + slot]];
        }
    }
    return out;
}

// Gives the machine a fresh initial state with transition(initial, 0) =
// initial. Sound because the sequence value is invariant under leading
// zeros, so the old initial state and its 0-successor are output-equivalent
// under every continuation.
Dfao freshen_initial(const Dfao& m) {
    if (m.stable_initial()) return m;
    const std::size_t width = m.alphabet.size();
    Dfao out = m;
    const State fresh = static_cast<State>(out.state_count());
    out.outputs.push_back(m.outputs[m.initial]);
    for (std::size_t slot = 0; slot < width; ++slot) {
        const Digit d = m.alphabet[slot];
        out.transitions.push_back(d == 0 ? fresh
                                         : m.transitions[static_cast<std::size_t>(m.initial) * width + slot]);
    }
    out.initial = fresh;
    return out;
}

}  // namespace

Dfao extend_digits(const Dfao& m, const DigitSet& ds, std::size_t state_cap) {
    validate_dfao(m);
    validate_digit_set(ds);
    if (ds.base != m.base) {
        throw InvalidArgumentError("extend_digits: digit set base does not match the machine");
    }
    if (m.alphabet.size() != m.base) {
        throw InvalidArgumentError("extend_digits: machine must be over canonical digits");
    }
    if (ds.max_digit == m.base - 1) return m;  // nothing to add

    const Dfao lsd_first = reverse_reading(m, state_cap);
    const Dfao with_carry = carry_product(lsd_first, ds.max_digit);
    const Dfao msd_first = reverse_reading(with_carry, state_cap);
    Dfao out = prune_reachable(freshen_initial(merge_equivalent_states(msd_first)));
    validate_dfao(out);
    return out;
}

Dfao restrict_digits(const Dfao& m, const DigitSet& ds) {
    validate_dfao(m, /*require_stable_initial=*/false);
    validate_digit_set(ds);
    if (ds.base != m.base) {
        throw InvalidArgumentError("restrict_digits: digit set base does not match the machine");
    }
    for (Digit d = 0; d <= ds.max_digit; ++d) {
        if (!m.has_digit(d)) {
            throw InvalidArgumentError("restrict_digits: digit " + std::to_string(d) +
                                       " is not in the machine's alphabet");
        }
    }
    Dfao out;
    out.base = m.base;
    out.alphabet.resize(ds.max_digit + 1);
    for (Digit d = 0; d <= ds.max_digit; ++d) out.alphabet[d] = d;
    out.initial = m.initial;
    out.outputs = m.outputs;
    out.transitions.reserve(m.state_count() * out.alphabet.size());
    for (State s = 0; s < m.state_count(); ++s) {
        for (Digit d = 0; d <= ds.max_digit; ++d) {
            out.transitions.push_back(m.step(s, d));
        }
    }
    validate_dfao(out, m.stable_initial());
    return out;
}

}  // namespace cobham
