// The certificate pipeline: from two DFAOs computing the same sequence in
// multiplicatively independent bases a and b, produce an eventual-periodicity
// certificate (threshold N0 and period p with f_x = f_{x+p} for all x >= N0)
// together with the full extraction trace, verify certificates against a
// machine, and test the state-teleport identity the construction rests on.
#pragma once

#include "cobham/approx.hpp"
#include "cobham/bigint.hpp"
#include "cobham/dfao.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cobham {

/// Two distinct indices x, y whose canonical runs end in state s of the
/// extended base-b machine and state t of the extended base-a machine.
/// Stored so that (x - y) has the sign of (a^m - b^n), making the derived
/// period positive.
struct StatePairWitness {
    State s = 0;
    State t = 0;
    Int x;
    Int y;
};

/// Everything the extraction computed: the infinite-state set of the
/// extended base-b machine, one witness pair per state, the tolerance
/// eps = 1/(6 xi) with its exponent pair, the per-state local periods, the
/// threshold geometry, and the covering start index.
struct ExtractionTrace {
    std::vector<State> s_infinity;           // sorted
    std::vector<StatePairWitness> witnesses; // sorted by s, one per S-infinity state
    Int xi;                                  // max witness index + 1
    Rat eps;                                 // 1/(6 xi)
    ApproxPair approx;                       // m, n with |a^m - b^n| <= eps b^n
    std::vector<std::pair<State, Int>> periods;  // s -> p_st, sorted by s
    Int x_start;                             // b^(extended machine state count)
    Rat interval_radius;                     // (2/3) b^n
};

const StatePairWitness& find_witness(const ExtractionTrace& trace, State s);
const Int& find_period(const ExtractionTrace& trace, State s);

/// Exact arithmetic every emitted trace satisfies:
///   6 * xi * |a^m - b^n| <= b^n,   5 b^n <= 6 a^m,   0 < 6 p_st <= b^n.
/// Throws InvalidArgumentError naming the first violated inequality.
void check_trace_arithmetic(const ExtractionTrace& trace);

/// The certificate: f_x = f_{x+period} for all x >= threshold, plus the
/// trace that produced it.
struct PeriodCertificate {
    Int threshold;  // N0
    Int period;     // p
    ExtractionTrace trace;
};

struct ExtractConfig {
    Int sanity_bound = 10'000;           // prefix length on which the inputs must agree
    std::uint64_t witness_cap = 1'000'000;  // indices scanned for witness pairs
    std::size_t reverse_cap = kDefaultReverseCap;
    std::uint64_t approx_cap = kDefaultApproxCap;
};

/// Runs the full construction. dfao_a and dfao_b must be canonical-digit
/// machines over multiplicatively independent bases computing the same
/// sequence; agreement is checked on the first sanity_bound values and a
/// disagreement is an input error. Deterministic: identical inputs yield
/// identical certificates.
PeriodCertificate extract(const Dfao& dfao_a, const Dfao& dfao_b,
                          const ExtractConfig& config = {});

struct VerificationReport {
    bool passed = true;
    std::optional<Int> counterexample;  // smallest failing index, if any
    Int window_checked;
    std::size_t samples_checked = 0;
};

/// Checks f_x == f_{x+p} for all x in [N0, N0 + window] and for `samples`
/// seeded pseudo-random x in [N0, N0 + 10 b^n]. Failures are report content,
/// not errors; the smallest counterexample wins.
VerificationReport verify_certificate(const Dfao& m, const PeriodCertificate& cert,
                                      const Int& window, std::size_t samples,
                                      std::uint64_t seed);

/// Teleport identity f_{x c^n + z} = f_{y c^n + z}: checks it for `trials`
/// seeded pseudo-random z in [0, 2 c^n] (every z there has a length-n window
/// word), or for every such z when trials covers the range. x and y must
/// share canonical-run state s in the extended machine.
bool teleport_check(const Dfao& dfao_ext, State s, const Int& x, const Int& y,
                    std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace cobham
