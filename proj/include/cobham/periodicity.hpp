// Local periods on integer intervals: verification against a sequence
// oracle, the overlap merge rule, chained gluing, and a brute-force minimal
// eventual-period finder used as a test oracle.
#pragma once

#include "cobham/bigint.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cobham {

/// Inclusive integer interval {lo,...,hi}.
struct Interval {
    Int lo;
    Int hi;

    Int cardinality() const { return hi - lo + 1; }
};

/// Throws InvalidArgumentError unless 0 <= lo <= hi.
void validate_interval(const Interval& iv);

/// The naturals within distance `radius` of `center`, snapped to integer
/// endpoints: lo = ceil(center - radius), hi = floor(center + radius).
/// Requires 0 <= radius <= center.
Interval ball(const Rat& center, const Rat& radius);

/// An interval together with a claimed local period on it. Claims are
/// verified against a sequence oracle before being merged; merging itself
/// never inspects the sequence.
struct IntervalClaim {
    Interval interval;
    Int period;
};

using SequenceOracle = std::function<std::string(const Int&)>;

/// True iff f_x == f_{x+p} for every x with x and x+p in the interval;
/// vacuously true when p >= cardinality.
bool check_local_period(const SequenceOracle& f, const IntervalClaim& claim);

/// Overlap merge: when the intervals union to an interval and the overlap
/// has at least period1 + period2 points, the first claim's period holds on
/// the union. Throws MergeError (reporting |I and J| and p+q) otherwise.
IntervalClaim merge_claims(const IntervalClaim& first, const IntervalClaim& second);

/// Left-fold of merge_claims; the result carries the first claim's period
/// over the union of all intervals. A failing merge aborts with the index of
/// the claim that could not be attached.
IntervalClaim glue_chain(const std::vector<IntervalClaim>& claims);

/// Brute-force oracle: the lexicographically least (preperiod, period) such
/// that prefix[x] == prefix[x + period] for all in-range x >= preperiod.
/// Reports a result only when the periodic tail spans at least 3 full
/// periods; otherwise nullopt.
std::optional<std::pair<std::size_t, std::size_t>>
minimal_ultimate_period(const std::vector<std::string>& prefix);

}  // namespace cobham
