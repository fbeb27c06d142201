#include "cobham/periodicity.hpp"

#include "cobham/errors.hpp"

#include <algorithm>

namespace cobham {

void validate_interval(const Interval& iv) {
    if (iv.lo < 0) throw InvalidArgumentError("interval: endpoints must be naturals");
    if (iv.lo > iv.hi) throw InvalidArgumentError("interval: lo must not exceed hi");
}

Interval ball(const Rat& center, const Rat& radius) {
    if (radius < 0 || radius > center) {
        throw InvalidArgumentError("ball: radius must lie in [0, center]");
    }
    Interval iv{ceil_rat(center - radius), floor_rat(center + radius)};
    validate_interval(iv);
    return iv;
}

bool check_local_period(const SequenceOracle& f, const IntervalClaim& claim) {
    validate_interval(claim.interval);
    if (claim.period <= 0) throw InvalidArgumentError("local period must be positive");
    const Int& p = claim.period;
    if (p >= claim.interval.cardinality()) return true;  // no pair fits
    for (Int x = claim.interval.lo; x + p <= claim.interval.hi; ++x) {
        if (f(x) != f(x + p)) return false;
    }
    return true;
}

IntervalClaim merge_claims(const IntervalClaim& first, const IntervalClaim& second) {
    validate_interval(first.interval);
    validate_interval(second.interval);
    if (first.period <= 0 || second.period <= 0) {
        throw InvalidArgumentError("local period must be positive");
    }
    const Int union_lo = std::min(first.interval.lo, second.interval.lo);
    const Int union_hi = std::max(first.interval.hi, second.interval.hi);
    const Int cap_lo = std::max(first.interval.lo, second.interval.lo);
    const Int cap_hi = std::min(first.interval.hi, second.interval.hi);
    const Int required = first.period + second.period;
    if (cap_lo > cap_hi + 1) {
        throw MergeError("merge: intervals are disjoint (|overlap| 0 < required " +
                         required.str() + ")");
    }
    const Int overlap = cap_lo > cap_hi ? Int(0) : Int(cap_hi - cap_lo + 1);
    if (overlap < required) {
        throw MergeError("merge: |overlap| " + overlap.str() + " < required p+q " +
                         required.str());
    }
    return IntervalClaim{{union_lo, union_hi}, first.period};
}

IntervalClaim glue_chain(const std::vector<IntervalClaim>& claims) {
    if (claims.empty()) throw InvalidArgumentError("glue_chain: no claims");
    IntervalClaim acc = claims.front();
    for (std::size_t i = 1; i < claims.size(); ++i) {
        try {
            acc = merge_claims(acc, claims[i]);
        } catch (const MergeError& e) {
            throw MergeError("glue_chain: claim " + std::to_string(i) + ": " + e.what());
        }
    }
    return acc;
}

std::optional<std::pair<std::size_t, std::size_t>>
minimal_ultimate_period(const std::vector<std::string>& prefix) {
    const std::size_t len = prefix.size();
    for (std::size_t preperiod = 0; preperiod < len; ++preperiod) {
        const std::size_t tail = len - preperiod;
        for (std::size_t period = 1; 3 * period <= tail; ++period) {
            bool ok = true;
            for (std::size_t x = preperiod; x + period < len; ++x) {
                if (prefix[x] != prefix[x + period]) {
                    ok = false;
                    break;
                }
            }
            if (ok) return std::make_pair(preperiod, period);
        }
    }
    return std::nullopt;
}

}  // namespace cobham
