#include <doctest.h>

#include "ctpp/causal/propensity.hpp"
#include "fixtures.hpp"

using namespace ctpp;

namespace {

// Cause at t=2 with w=1, intervention at t=2.5 with w_v=1, T=10.
// Joint durations: {c=1,v=1} = (2.5,3] -> 0.5, {c=1,v=0} = (2,2.5] -> 0.5,
// {c=0,v=1} = (3,3.5] -> 0.5, {c=0,v=0} = 8.5.
std::vector<EventSequence> handcrafted() {
    return {{"fx", 10.0, {{0, 2.0}, {2, 2.5}}}};
}

Taxonomy fixture_taxonomy() { return make_taxonomy(1, 0, 1, 1); }

}  // namespace

TEST_CASE("duration-ratio propensity is exact on the handcrafted fixture") {
    const auto tax = fixture_taxonomy();
    const auto table = estimate_propensity(handcrafted(), tax, {1.0, 1.0}, 0, 2, {});
    REQUIRE(table.strata.size() == 1);
    const auto& cell = table.strata.at(0);
    CHECK(cell.total == 10.0);
    CHECK(cell.dur[1][1] / cell.total == 0.05);  // machine precision
    CHECK(cell.dur[1][0] / cell.total == 0.05);
    CHECK(cell.dur[0][1] / cell.total == 0.05);
    CHECK(cell.dur[0][0] / cell.total == 0.85);
    CHECK(table.raw(0, 1, 1) == 0.05);
    CHECK(table.raw(0, 1, 0) == 0.05);
}

TEST_CASE("no cause events: raw zero clipped to epsilon") {
    const auto tax = fixture_taxonomy();
    std::vector<EventSequence> data{{"a", 10.0, {{2, 2.5}}}};
    const auto table = estimate_propensity(data, tax, {1.0, 1.0}, 0, 2, {}, 0.01);
    for (int v = 0; v < 2; ++v) {
        const auto lk = table.propensity(0, 1, v);
        CHECK(lk.e == 0.01);
        CHECK_FALSE(lk.fell_back);
    }
}

TEST_CASE("cause active everywhere, intervention never") {
    const auto tax = fixture_taxonomy();
    // Events at 0, 0.9, ... with w=1 cover (0, T].
    std::vector<Event> events;
    for (double t = 0.0; t < 10.0; t += 0.9) events.push_back({0, t});
    std::vector<EventSequence> data{{"a", 10.0, events}};
    const auto table = estimate_propensity(data, tax, {1.0, 1.0}, 0, 2, {}, 0.01);
    CHECK(table.propensity(0, 1, 0).e == 1.0 - 0.01);
    CHECK(table.propensity(0, 1, 1).e == 0.01);
}

TEST_CASE("strata below the minimum duration fall back to the marginal") {
    Taxonomy tax = make_taxonomy(1, 1, 1, 1);  // ids: 0 cause, 1 covariate, 2 outcome, 3 iv
    std::vector<EventSequence> data{
        {"a", 10.0, {{0, 2.0}, {1, 9.89}, {3, 2.5}}}};  // covariate stratum: (9.89, 10]
    const auto table =
        estimate_propensity(data, tax, {1.0, 1.0}, 0, 3, {1}, 0.01, 0.5);
    CHECK(table.dropped_strata == 1);
    CHECK(table.strata.size() == 1);
    const auto lk = table.propensity(1, 1, 0);  // dropped stratum -> marginal
    CHECK(lk.fell_back);

    CHECK_THROWS_AS(
        estimate_propensity(data, tax, {1.0, 1.0}, 0, 3, {1}, 0.01, 1e9),
        EstimationError);
}

TEST_CASE("estimation preconditions") {
    const auto tax = fixture_taxonomy();
    CHECK_THROWS_AS(estimate_propensity({}, tax, {1.0, 1.0}, 0, 2, {}),
                    EstimationError);
    CHECK_THROWS_AS(
        estimate_propensity(handcrafted(), tax, {1.0, 1.0}, 0, 2, {0}),
        ConfigError);  // covariates must exclude the cause
}

TEST_CASE("overlap check") {
    const auto tax = fixture_taxonomy();
    const auto table = estimate_propensity(handcrafted(), tax, {1.0, 1.0}, 0, 2, {});

    SUBCASE("fixture passes at epsilon 0.01") {
        const auto rep = check_overlap(table, 0.01);
        CHECK(rep.pass);
        CHECK(rep.violations.empty());
        CHECK(rep.min_e == doctest::Approx(0.05));
    }

    SUBCASE("raw zero propensity fails and is reported") {
        std::vector<EventSequence> no_cause{{"a", 10.0, {{2, 2.5}}}};
        const auto t2 = estimate_propensity(no_cause, tax, {1.0, 1.0}, 0, 2, {});
        const auto rep = check_overlap(t2, 0.01);
        CHECK_FALSE(rep.pass);
        REQUIRE(!rep.violations.empty());
        CHECK(rep.violations[0].value == 0.0);
    }

    SUBCASE("tight epsilon turns the fixture into a failure") {
        const auto rep = check_overlap(table, 0.06);
        CHECK_FALSE(rep.pass);
    }
}
