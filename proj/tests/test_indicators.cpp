#include <doctest.h>

#include <cmath>

#include "ctpp/core/error.hpp"
#include "ctpp/core/indicators.hpp"
#include "ctpp/core/rng.hpp"

using namespace ctpp;

namespace {

Taxonomy two_type_taxonomy() {
    return Taxonomy({Role::Cause, Role::Outcome});
}

EventSequence make_seq(double T, std::vector<Event> events) {
    EventSequence s;
    s.seq_id = "t";
    s.horizon_T = T;
    s.events = std::move(events);
    return s;
}

}  // namespace

TEST_CASE("indicator set of a single event") {
    const auto tax = two_type_taxonomy();
    const auto seq = make_seq(10.0, {{0, 1.0}});
    const auto s = indicator_set(seq, tax, {0}, 0.5);
    REQUIRE(s.size() == 1);
    CHECK(s.intervals()[0].lo == doctest::Approx(1.0));
    CHECK(s.intervals()[0].hi == doctest::Approx(1.5));
    // Membership matches "event occurred in [t-w, t)".
    CHECK_FALSE(s.contains(1.0));
    CHECK(s.contains(1.2));
    CHECK(s.contains(1.5));
    CHECK_FALSE(s.contains(1.6));
}

TEST_CASE("indicator set with no matching events is empty") {
    const auto tax = two_type_taxonomy();
    const auto seq = make_seq(10.0, {{1, 2.0}});
    const auto s = indicator_set(seq, tax, {0}, 0.5);
    CHECK(s.empty());
    CHECK(s.measure() == 0.0);
}

TEST_CASE("overlapping indicator windows merge") {
    const auto tax = two_type_taxonomy();
    const auto seq = make_seq(10.0, {{0, 1.0}, {0, 1.3}});
    const auto s = indicator_set(seq, tax, {0}, 0.5);
    REQUIRE(s.size() == 1);
    CHECK(s.intervals()[0].lo == doctest::Approx(1.0));
    CHECK(s.intervals()[0].hi == doctest::Approx(1.8));
    CHECK(s.measure() == doctest::Approx(0.8));
}

TEST_CASE("indicator set clips at the horizon and rejects unknown ids") {
    const auto tax = two_type_taxonomy();
    const auto seq = make_seq(2.0, {{0, 1.9}});
    const auto s = indicator_set(seq, tax, {0}, 0.5);
    CHECK(s.measure() == doctest::Approx(0.1));
    CHECK_THROWS_AS(indicator_set(seq, tax, {7}, 0.5), TaxonomyError);
    CHECK_THROWS_AS(indicator_set(seq, tax, {0}, 0.0), ArgumentError);
}

TEST_CASE("indicator measure bound and monotonicity in w") {
    Rng rng(7);
    const auto tax = two_type_taxonomy();
    for (int rep = 0; rep < 100; ++rep) {
        const double T = 20.0;
        std::vector<Event> events;
        double t = 0.0;
        while (true) {
            t += rng.exponential(1.0);
            if (t >= T) break;
            events.push_back({0, t});
        }
        const auto seq = make_seq(T, events);
        const double w1 = rng.uniform(0.05, 1.0);
        const double w2 = w1 + rng.uniform(0.0, 1.0);
        const auto s1 = indicator_set(seq, tax, {0}, w1);
        const auto s2 = indicator_set(seq, tax, {0}, w2);

        // measure <= n_events * w, equality iff gaps are all >= w.
        CHECK(s1.measure() <=
              static_cast<double>(events.size()) * w1 + 1e-12);
        bool any_close = false;
        for (std::size_t i = 0; i + 1 < events.size(); ++i)
            any_close |= (events[i + 1].t - events[i].t < w1);
        const bool clipped = !events.empty() && events.back().t + w1 > T;
        if (!any_close && !clipped)
            CHECK(s1.measure() ==
                  doctest::Approx(static_cast<double>(events.size()) * w1));

        // w1 <= w2 implies set(w1) subset of set(w2).
        CHECK(s1.intersect(s2) == s1);
    }
}

TEST_CASE("covariate pattern timeline basics") {
    Taxonomy tax({Role::Cause, Role::Outcome, Role::Covariate, Role::Covariate});

    SUBCASE("zero covariates: one constant empty piece") {
        const auto seq = make_seq(5.0, {{0, 1.0}});
        const auto tl = covariate_pattern_timeline(seq, tax, {}, 1.0);
        REQUIRE(tl.piece_count() == 1);
        CHECK(tl.patterns[0] == 0);
        CHECK(tl.edges.front() == 0.0);
        CHECK(tl.edges.back() == 5.0);
    }

    SUBCASE("one covariate event at t=2 with w=1") {
        const auto seq = make_seq(10.0, {{2, 2.0}});
        const auto tl = covariate_pattern_timeline(seq, tax, {2}, 1.0);
        REQUIRE(tl.piece_count() == 3);
        CHECK(tl.pattern_at(1.0) == 0);
        CHECK(tl.pattern_at(2.5) == 1);
        CHECK(tl.pattern_at(3.0) == 1);
        CHECK(tl.pattern_at(3.5) == 0);
    }

    SUBCASE("pieces partition (0, T]") {
        Rng rng(99);
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<Event> events;
            double t = 0.0;
            while ((t += rng.exponential(1.5)) < 12.0)
                events.push_back({rng.bernoulli(0.5) ? 2 : 3, t});
            const auto seq = make_seq(12.0, events);
            const auto tl = covariate_pattern_timeline(seq, tax, {2, 3}, 0.7);
            double total = 0.0;
            for (std::size_t i = 0; i < tl.piece_count(); ++i)
                total += tl.piece_measure(i);
            CHECK(total == doctest::Approx(12.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("sequence validation catches ordering and horizon violations") {
    const auto tax = two_type_taxonomy();
    auto ok = make_seq(5.0, {{0, 1.0}, {1, 2.0}});
    CHECK_NOTHROW(ok.validate(&tax));

    auto unsorted = make_seq(5.0, {{0, 2.0}, {1, 1.0}});
    CHECK_THROWS_AS(unsorted.validate(), ConfigError);

    auto tie = make_seq(5.0, {{0, 2.0}, {1, 2.0}});
    CHECK_THROWS_AS(tie.validate(), ConfigError);

    auto outside = make_seq(5.0, {{0, 5.0}});
    CHECK_THROWS_AS(outside.validate(), ConfigError);

    auto unknown = make_seq(5.0, {{9, 1.0}});
    CHECK_THROWS_AS(unknown.validate(&tax), TaxonomyError);
}
