#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "evident/errors.hpp"

namespace evident {

// Bound comparison tolerance for interval identity.
inline constexpr double kBoundTol = 1e-9;

// Closed numeric subinterval of [0,1]. Degenerate intervals (lo == hi)
// are allowed; [0,0] is the "irrelevant" appraisal.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
            throw InvalidInput("interval [" + std::to_string(lo_) + ", " +
                               std::to_string(hi_) + "] violates 0 <= lo <= hi <= 1");
        }
    }

    double length() const { return hi - lo; }
    bool is_point() const { return hi - lo <= kBoundTol; }

    bool approx_eq(const Interval& other, double tol = kBoundTol) const {
        return std::abs(lo - other.lo) <= tol && std::abs(hi - other.hi) <= tol;
    }

    // a contained in b (closed-interval subset).
    bool subset_of(const Interval& other) const {
        return other.lo <= lo + kBoundTol && hi <= other.hi + kBoundTol;
    }
};

// Intersection of two closed intervals; touching endpoints count as
// agreement, so [0,0.5] and [0.5,1] meet in the point [0.5,0.5].
inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    double lo = std::max(a.lo, b.lo);
    double hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
}

inline bool intersects(const Interval& a, const Interval& b) {
    return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

}  // namespace evident
