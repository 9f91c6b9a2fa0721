#include "ctpp/core/interval_set.hpp"

#include <algorithm>

namespace ctpp {

IntervalSet IntervalSet::from(std::vector<Interval> parts) {
    std::erase_if(parts, [](const Interval& iv) { return !(iv.lo < iv.hi); });
    std::sort(parts.begin(), parts.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    IntervalSet out;
    for (const auto& iv : parts) {
        if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
            out.parts_.back().hi = std::max(out.parts_.back().hi, iv.hi);
        } else {
            out.parts_.push_back(iv);
        }
    }
    return out;
}

bool IntervalSet::contains(double t) const {
    // First interval with hi >= t; membership then needs lo < t.
    auto it = std::lower_bound(
        parts_.begin(), parts_.end(), t,
        [](const Interval& iv, double x) { return iv.hi < x; });
    return it != parts_.end() && it->lo < t;
}

double IntervalSet::measure() const {
    double m = 0.0;
    for (const auto& iv : parts_) m += iv.hi - iv.lo;
    return m;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return from(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const Interval& a = parts_[i];
        const Interval& b = other.parts_[j];
        const double lo = std::max(a.lo, b.lo);
        const double hi = std::min(a.hi, b.hi);
        if (lo < hi) out.push_back({lo, hi});
        if (a.hi < b.hi)
            ++i;
        else
            ++j;
    }
    return from(std::move(out));
}

IntervalSet IntervalSet::complement(double lo, double hi) const {
    std::vector<Interval> out;
    double cursor = lo;
    for (const auto& iv : parts_) {
        if (iv.hi <= lo) continue;
        if (iv.lo >= hi) break;
        if (iv.lo > cursor) out.push_back({cursor, std::min(iv.lo, hi)});
        cursor = std::max(cursor, iv.hi);
        if (cursor >= hi) break;
    }
    if (cursor < hi) out.push_back({cursor, hi});
    return from(std::move(out));
}

std::vector<double> IntervalSet::breakpoints() const {
    std::vector<double> pts;
    pts.reserve(parts_.size() * 2);
    for (const auto& iv : parts_) {
        pts.push_back(iv.lo);
        pts.push_back(iv.hi);
    }
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace ctpp
