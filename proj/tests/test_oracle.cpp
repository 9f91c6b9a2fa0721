#include <doctest.h>

#include <cmath>

#include "ctpp/sim/oracle.hpp"
#include "fixtures.hpp"

using namespace ctpp;

TEST_CASE("baseline-kind oracle recovers the closed form mu' - mu") {
    const testutil::BaselineShiftFixture fx(21);
    OracleOptions opt;
    opt.mc_sequences = 20;
    opt.horizon_T = 15.0;
    opt.grid_dt = 0.05;
    opt.seed = 101;

    const auto v1 = true_ate_oracle(fx.truth, fx.taxonomy, 0, 1, 2, 1, opt);
    CHECK(v1.tau == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(v1.se <= 1e-12);

    const auto v0 = true_ate_oracle(fx.truth, fx.taxonomy, 0, 1, 2, 0, opt);
    CHECK(v0.tau == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("pair with no kernel link and no targeting intervention has tau = 0") {
    // Two causes and outcomes; the intervention targets (0, 2) only.
    Taxonomy tax = make_taxonomy(2, 0, 2, 1);
    GroundTruth truth;
    truth.hawkes.baselines = {1.0, 0.8, 1.5, 1.2, 0.0};
    truth.hawkes.kernels.assign(5, std::vector<ExpKernel>(5));
    truth.cause_window = 0.5;
    truth.master_seed = 3;
    InterventionSpec iv;
    iv.intervention_type = 4;
    iv.kind = InterventionKind::Baseline;
    iv.cause = 0;
    iv.outcome = 2;
    iv.occurrence_prob = 0.5;
    iv.window = 0.7;
    iv.modified_mu = 4.0;
    truth.interventions.push_back(iv);

    OracleOptions opt;
    opt.mc_sequences = 10;
    opt.horizon_T = 10.0;
    opt.grid_dt = 0.1;
    for (int v = 0; v < 2; ++v) {
        const auto r = true_ate_oracle(truth, tax, 1, 3, 4, v, opt);
        CHECK(r.tau == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(r.se <= 1e-12);
    }
}

TEST_CASE("cause-kind oracle matches the mean kernel-mass formula") {
    // Zero base kernels; the intervention introduces phi' = 5 exp(-t) from the
    // cause into the outcome. With the modification state forced on, the mean
    // forced difference is rate_c * (a'/b') * (1 - (1 - exp(-bT)) / (bT)).
    Taxonomy tax = make_taxonomy(1, 0, 1, 1);
    GroundTruth truth;
    truth.hawkes.baselines = {2.5, 1.5, 0.0};
    truth.hawkes.kernels.assign(3, std::vector<ExpKernel>(3));
    truth.cause_window = 0.5;
    truth.master_seed = 8;
    InterventionSpec iv;
    iv.intervention_type = 2;
    iv.kind = InterventionKind::Cause;
    iv.cause = 0;
    iv.outcome = 1;
    iv.occurrence_prob = 0.5;
    iv.window = 0.7;
    iv.modified_kernel = {5.0, 1.0};
    truth.interventions.push_back(iv);

    OracleOptions opt;
    opt.mc_sequences = 300;
    opt.horizon_T = 30.0;
    opt.grid_dt = 0.02;
    opt.seed = 7;
    opt.jobs = 4;

    const double T = opt.horizon_T;
    const double expected = 2.5 * 5.0 * (1.0 - (1.0 - std::exp(-T)) / T);
    const auto r = true_ate_oracle(truth, tax, 0, 1, 2, 1, opt);
    CHECK(std::abs(r.tau - expected) < 5.0 * r.se + 0.05);
    CHECK(r.se < 0.2);
}

TEST_CASE("oracle argument validation") {
    const testutil::BaselineShiftFixture fx;
    OracleOptions opt;
    opt.mc_sequences = 0;
    CHECK_THROWS_AS(true_ate_oracle(fx.truth, fx.taxonomy, 0, 1, 2, 1, opt),
                    ArgumentError);
    opt.mc_sequences = 1;
    CHECK_THROWS_AS(true_ate_oracle(fx.truth, fx.taxonomy, 1, 0, 2, 1, opt),
                    ArgumentError);
}
