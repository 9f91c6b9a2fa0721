#include <doctest.h>

#include <vector>

#include "ctpp/core/interval_set.hpp"
#include "ctpp/core/rng.hpp"

using ctpp::IntervalSet;
using ctpp::Rng;

namespace {

IntervalSet random_set(Rng& rng, double span) {
    std::vector<IntervalSet::Interval> parts;
    const int n = rng.uniform_int(0, 6);
    for (int i = 0; i < n; ++i) {
        const double lo = rng.uniform(0.0, span);
        parts.push_back({lo, lo + rng.uniform(0.0, span / 3.0)});
    }
    return IntervalSet::from(std::move(parts));
}

// Brute-force membership oracle on a fine grid of strictly interior points.
bool grid_equal(const IntervalSet& a, const IntervalSet& b, double span) {
    for (int i = 0; i <= 4000; ++i) {
        const double t = span * (static_cast<double>(i) + 0.37) / 4000.0;
        if (a.contains(t) != b.contains(t)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("normalization merges overlapping and touching parts") {
    auto s = IntervalSet::from({{1.0, 1.5}, {1.3, 1.8}});
    REQUIRE(s.size() == 1);
    CHECK(s.intervals()[0].lo == doctest::Approx(1.0));
    CHECK(s.intervals()[0].hi == doctest::Approx(1.8));
    CHECK(s.measure() == doctest::Approx(0.8));

    auto touching = IntervalSet::from({{0.0, 1.0}, {1.0, 2.0}});
    CHECK(touching.size() == 1);
    CHECK(touching.measure() == doctest::Approx(2.0));
}

TEST_CASE("half-open membership (lo, hi]") {
    auto s = IntervalSet::from({{1.0, 2.0}});
    CHECK_FALSE(s.contains(1.0));
    CHECK(s.contains(1.5));
    CHECK(s.contains(2.0));
    CHECK_FALSE(s.contains(2.5));
    CHECK_FALSE(IntervalSet{}.contains(0.5));
}

TEST_CASE("empty input stays empty") {
    auto s = IntervalSet::from({{2.0, 2.0}, {3.0, 1.0}});
    CHECK(s.empty());
    CHECK(s.measure() == 0.0);
}

TEST_CASE("set algebra agrees with a membership oracle") {
    Rng rng(20240811);
    const double span = 10.0;
    for (int rep = 0; rep < 200; ++rep) {
        const auto a = random_set(rng, span);
        const auto b = random_set(rng, span);

        const auto u = a.unite(b);
        const auto x = a.intersect(b);
        const auto c = a.complement(0.0, span);

        for (int i = 0; i <= 500; ++i) {
            const double t = span * (static_cast<double>(i) + 0.43) / 500.0;
            CHECK(u.contains(t) == (a.contains(t) || b.contains(t)));
            CHECK(x.contains(t) == (a.contains(t) && b.contains(t)));
            CHECK(c.contains(t) == !a.contains(t));
        }
        // Inclusion-exclusion on measures.
        CHECK(u.measure() ==
              doctest::Approx(a.measure() + b.measure() - x.measure()).epsilon(1e-12));
        // Complement partitions (0, span].
        CHECK(a.measure() + c.measure() == doctest::Approx(span).epsilon(1e-12));
        // Idempotence and commutativity through the grid oracle.
        CHECK(grid_equal(a.unite(a), a, span));
        CHECK(grid_equal(a.unite(b), b.unite(a), span));
        CHECK(grid_equal(a.intersect(b), b.intersect(a), span));
    }
}

TEST_CASE("breakpoints are sorted endpoint lists") {
    auto s = IntervalSet::from({{1.0, 2.0}, {4.0, 5.5}});
    const auto pts = s.breakpoints();
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == 1.0);
    CHECK(pts[1] == 2.0);
    CHECK(pts[2] == 4.0);
    CHECK(pts[3] == 5.5);
}
