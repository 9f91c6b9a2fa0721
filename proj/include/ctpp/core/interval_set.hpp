#pragma once

#include <vector>

namespace ctpp {

// Union of half-open intervals (lo, hi], kept sorted and pairwise disjoint.
// Adjacent intervals merge, so the representation is canonical and measures
// add exactly.
class IntervalSet {
public:
    struct Interval {
        double lo = 0.0;
        double hi = 0.0;
        bool operator==(const Interval&) const = default;
    };

    IntervalSet() = default;

    // Normalizes arbitrary input: sorts, drops empty parts, merges overlaps.
    static IntervalSet from(std::vector<Interval> parts);

    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    const std::vector<Interval>& intervals() const { return parts_; }

    // Membership under the (lo, hi] convention.
    bool contains(double t) const;

    double measure() const;

    IntervalSet unite(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    // Complement relative to the window (lo, hi].
    IntervalSet complement(double lo, double hi) const;

    // All endpoints, sorted, without duplicates.
    std::vector<double> breakpoints() const;

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<Interval> parts_;
};

}  // namespace ctpp
