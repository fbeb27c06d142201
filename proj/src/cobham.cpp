#include "cobham/cobham.hpp"

#include "cobham/errors.hpp"
#include "cobham/numeration.hpp"
#include "cobham/periodicity.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

namespace cobham {

const StatePairWitness& find_witness(const ExtractionTrace& trace, State s) {
    auto it = std::lower_bound(trace.witnesses.begin(), trace.witnesses.end(), s,
                               [](const StatePairWitness& w, State k) { return w.s < k; });
    if (it == trace.witnesses.end() || it->s != s) {
        throw InvalidArgumentError("trace witnesses: no entry for state " + std::to_string(s));
    }
    return *it;
}

const Int& find_period(const ExtractionTrace& trace, State s) {
    auto it = std::lower_bound(trace.periods.begin(), trace.periods.end(), s,
                               [](const std::pair<State, Int>& p, State k) { return p.first < k; });
    if (it == trace.periods.end() || it->first != s) {
        throw InvalidArgumentError("trace periods: no entry for state " + std::to_string(s));
    }
    return it->second;
}

void check_trace_arithmetic(const ExtractionTrace& trace) {
    const Int am = pow_int(trace.approx.a, trace.approx.m);
    const Int bn = pow_int(trace.approx.b, trace.approx.n);
    const Int diff = boost::multiprecision::abs(am - bn);
    if (6 * trace.xi * diff > bn) {
        throw InvalidArgumentError("trace: 6 xi |a^m - b^n| <= b^n violated");
    }
    if (5 * bn > 6 * am) {
        throw InvalidArgumentError("trace: 5 b^n <= 6 a^m violated");
    }
    for (const auto& [s, p] : trace.periods) {
        if (p <= 0 || 6 * p > bn) {
            throw InvalidArgumentError("trace: 0 < 6 p_st <= b^n violated for state " +
                                       std::to_string(s));
        }
    }
}

namespace {

// Incremental canonical-run state enumerator: entry x of each table is the
// state of x's canonical representation, extended one index at a time.
class StateEnumerator {
public:
    explicit StateEnumerator(const Dfao& m) : machine_(m) { table_.push_back(m.initial); }

    State state_of(std::uint64_t x) {
        while (table_.size() <= x) {
            const std::uint64_t next = table_.size();
            table_.push_back(machine_.step(table_[next / machine_.base],
                                           static_cast<Digit>(next % machine_.base)));
        }
        return table_[x];
    }

private:
    const Dfao& machine_;
    std::vector<State> table_;
};

}  // namespace

PeriodCertificate extract(const Dfao& dfao_a, const Dfao& dfao_b, const ExtractConfig& config) {
    validate_dfao(dfao_a);
    validate_dfao(dfao_b);
    const unsigned a = dfao_a.base;
    const unsigned b = dfao_b.base;
    if (!multiplicatively_independent(a, b)) {
        const auto [wm, wn] = dependence_witness(a, b);
        throw InvalidArgumentError("extract: bases are multiplicatively dependent (" +
                                   std::to_string(a) + "^" + std::to_string(wm) + " = " +
                                   std::to_string(b) + "^" + std::to_string(wn) + ")");
    }

    // Equality of the two sequences is the hypothesis of the whole
    // construction; test it on a finite prefix and refuse visibly mismatched
    // inputs. A certificate is only as valid as this hypothesis.
    for (Int x = 0; x < config.sanity_bound; ++x) {
        if (evaluate(dfao_a, x) != evaluate(dfao_b, x)) {
            throw InvalidArgumentError("extract: input sequences disagree at index " + x.str());
        }
    }

    // Step 1: extended-digit machines over {0,...,2c}.
    const Dfao ext_a = extend_digits(dfao_a, extended_digit_set(a), config.reverse_cap);
    const Dfao ext_b = extend_digits(dfao_b, extended_digit_set(b), config.reverse_cap);

    // Step 2: states of the base-b machine hit by infinitely many indices.
    ExtractionTrace trace;
    trace.s_infinity = infinite_canonical_states(ext_b);

    // Step 3: for each such state s, the first two indices that agree on the
    // full (s, t) state pair across both machines.
    std::vector<bool> wanted(ext_b.state_count(), false);
    for (State s : trace.s_infinity) wanted[s] = true;
    std::size_t missing = trace.s_infinity.size();

    StateEnumerator states_a(ext_a);
    StateEnumerator states_b(ext_b);
    std::map<std::pair<State, State>, Int> first_seen;
    std::map<State, StatePairWitness> found;
    for (std::uint64_t x = 0; missing > 0; ++x) {
        if (x > config.witness_cap) {
            throw ResourceLimitError("extract: witness search cap of " +
                                     std::to_string(config.witness_cap) + " exceeded with " +
                                     std::to_string(missing) + " states uncovered");
        }
        const State s = states_b.state_of(x);
        if (!wanted[s] || found.count(s)) continue;
        const State t = states_a.state_of(x);
        auto [it, inserted] = first_seen.emplace(std::make_pair(s, t), Int(x));
        if (!inserted) {
            found.emplace(s, StatePairWitness{s, t, it->second, Int(x)});
            --missing;
        }
    }
    trace.witnesses.reserve(found.size());
    for (auto& [s, w] : found) trace.witnesses.push_back(std::move(w));

    // Step 4: xi and the power approximation at eps = 1/(6 xi).
    trace.xi = 1;
    for (const auto& w : trace.witnesses) {
        const Int top = (w.x > w.y ? w.x : w.y) + 1;
        if (top > trace.xi) trace.xi = top;
    }
    trace.eps = Rat(1, 6 * trace.xi);
    trace.approx = approx_powers(a, b, trace.eps, config.approx_cap);

    const Int power_a = pow_int(a, trace.approx.m);
    const Int power_b = pow_int(b, trace.approx.n);
    const Int delta = power_a - power_b;  // nonzero: bases are independent

    // Step 5: per-state periods p_st = (x - y)(a^m - b^n) > 0, swapping the
    // witness pair when needed.
    for (auto& w : trace.witnesses) {
        if ((w.x - w.y) * delta < 0) std::swap(w.x, w.y);
        trace.periods.emplace_back(w.s, (w.x - w.y) * delta);
    }

    // Step 6: from x_start on, every index has a representation longer than
    // the extended machine's state count, so its run revisits a state and
    // its final state lies in S-infinity.
    trace.x_start = pow_int(b, ext_b.state_count());
    trace.interval_radius = Rat(2 * power_b, 3);

    Word start_repr(ext_b.state_count() + 1, 0);
    start_repr[0] = 1;  // b^(state count) in base b
    const State start_state = run(ext_b, start_repr);
    if (!wanted[start_state]) {
        throw Error("extract: internal: covering state not in S-infinity");
    }

    // Step 7: the certificate carries the covering state's period and the
    // low endpoint of the first interval of the glue chain.
    PeriodCertificate cert;
    cert.trace = std::move(trace);
    cert.period = find_period(cert.trace, start_state);
    cert.threshold =
        ceil_rat(Rat((cert.trace.x_start + 1) * power_b) - cert.trace.interval_radius);

    check_trace_arithmetic(cert.trace);
    return cert;
}

namespace {

// Sum of two canonical digit words (most significant first), leading zeros
// stripped. Keeps certificate verification at huge indices free of big-int
// division: every index is handled as a digit string.
Word add_words(const Word& lhs, const Word& rhs, unsigned base) {
    Word sum(std::max(lhs.size(), rhs.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < sum.size(); ++i) {
        std::uint64_t total = carry;
        if (i < lhs.size()) total += lhs[lhs.size() - 1 - i];
        if (i < rhs.size()) total += rhs[rhs.size() - 1 - i];
        sum[sum.size() - 1 - i] = static_cast<Digit>(total % base);
        carry = total / base;
    }
    std::size_t lead = 0;
    while (lead + 1 < sum.size() && sum[lead] == 0) ++lead;
    sum.erase(sum.begin(), sum.begin() + lead);
    if (sum.size() == 1 && sum[0] == 0) sum.clear();
    return sum;
}

Digit draw_digit(std::mt19937_64& rng, unsigned base) {
    const std::uint64_t accept_below = UINT64_MAX / base * base;
    while (true) {
        const std::uint64_t v = rng();
        if (v < accept_below) return static_cast<Digit>(v % base);
    }
}

// Uniform value in [0, value(bound)] as a digit string of the same length,
// leading zeros included; rejection restarts on overflow.
Word draw_below(std::mt19937_64& rng, const Word& bound, unsigned base) {
    Word u(bound.size());
    while (true) {
        bool tight = true;
        bool overflow = false;
        for (std::size_t i = 0; i < bound.size(); ++i) {
            const Digit d = draw_digit(rng, base);
            if (tight) {
                if (d > bound[i]) {
                    overflow = true;
                    break;
                }
                if (d < bound[i]) tight = false;
            }
            u[i] = d;
        }
        if (!overflow) return u;
    }
}

}  // namespace

VerificationReport verify_certificate(const Dfao& m, const PeriodCertificate& cert,
                                      const Int& window, std::size_t samples,
                                      std::uint64_t seed) {
    if (window < 0) throw InvalidArgumentError("verify: window must be non-negative");
    if (cert.period <= 0) throw InvalidArgumentError("verify: certificate period must be positive");

    VerificationReport report;
    report.window_checked = window;
    std::optional<Int> worst;

    // Exhaustive sweep of [N0, N0 + window]. Both digit strings are stepped
    // in place, so the cost per index is one automaton run, not a division
    // chain on huge integers.
    Word low = canonical_repr(cert.threshold, m.base);
    Word high = canonical_repr(cert.threshold + cert.period, m.base);
    auto increment = [&](Word& digits) {
        std::size_t i = digits.size();
        while (i > 0) {
            --i;
            if (digits[i] + 1 < m.base) {
                ++digits[i];
                return;
            }
            digits[i] = 0;
        }
        digits.insert(digits.begin(), 1);
    };
    const Int sweep_end = cert.threshold + window;
    for (Int x = cert.threshold; x <= sweep_end; ++x) {
        if (m.outputs[run(m, low)] != m.outputs[run(m, high)]) {
            worst = x;
            break;
        }
        increment(low);
        increment(high);
    }

    // Seeded samples from [N0, N0 + 10 b^n], drawn and added in digit space.
    const Word period_digits = canonical_repr(cert.period, m.base);
    const Word threshold_digits = canonical_repr(cert.threshold, m.base);
    const Int bn = pow_int(cert.trace.approx.b, cert.trace.approx.n);
    const Word span_digits = canonical_repr(10 * bn, m.base);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Word offset = draw_below(rng, span_digits, m.base);
        const Word at = add_words(threshold_digits, offset, m.base);
        const Word at_shifted = add_words(at, period_digits, m.base);
        if (m.outputs[run(m, at)] != m.outputs[run(m, at_shifted)]) {
            const Int x = eval_word(at, m.base);
            if (!worst || x < *worst) worst = x;
        }
    }
    report.samples_checked = samples;
    report.counterexample = worst;
    report.passed = !worst.has_value();
    return report;
}

bool teleport_check(const Dfao& dfao_ext, State s, const Int& x, const Int& y,
                    std::size_t n, std::size_t trials, std::uint64_t seed) {
    if (n == 0) throw InvalidArgumentError("teleport_check: n must be positive");
    const unsigned c = dfao_ext.base;
    if (run(dfao_ext, canonical_repr(x, c)) != s || run(dfao_ext, canonical_repr(y, c)) != s) {
        throw InvalidArgumentError("teleport_check: indices do not share canonical state " +
                                   std::to_string(s));
    }
    const Int cn = pow_int(c, n);
    const Int span = 2 * cn;  // z ranges over [0, 2 c^n]
    const DigitSet window_digits = extended_digit_set(c);

    auto check_one = [&](const Int& z) {
        // Window membership: z has a length-n word over the extended digits.
        const Word w = represent_in_window(z, c, n, window_digits);
        if (eval_word(w, c) != z) throw Error("teleport_check: internal: window word mismatch");
        return evaluate(dfao_ext, x * cn + z) == evaluate(dfao_ext, y * cn + z);
    };

    if (Int(trials) > span) {
        for (Int z = 0; z <= span; ++z) {
            if (!check_one(z)) return false;
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        if (!check_one(uniform_int(rng, 0, span))) return false;
    }
    return true;
}

}  // namespace cobham
