#pragma once

#include "ctpp/sim/generate.hpp"
#include "ctpp/sim/spec.hpp"

namespace testutil {

// Single cause + outcome + baseline-kind intervention, zero kernels:
// mu_c = 2.5, mu_o = 1.5 -> 5.5 while both windows are active.
// Type ids: 0 cause, 1 outcome, 2 intervention.
struct BaselineShiftFixture {
    ctpp::Taxonomy taxonomy = ctpp::make_taxonomy(1, 0, 1, 1);
    ctpp::GroundTruth truth;

    explicit BaselineShiftFixture(std::uint64_t seed = 1) {
        truth.hawkes.baselines = {2.5, 1.5, 0.0};
        truth.hawkes.kernels.assign(3, std::vector<ctpp::ExpKernel>(3));
        truth.cause_window = 0.5;
        truth.master_seed = seed;
        ctpp::InterventionSpec iv;
        iv.intervention_type = 2;
        iv.kind = ctpp::InterventionKind::Baseline;
        iv.cause = 0;
        iv.outcome = 1;
        iv.occurrence_prob = 0.5;
        iv.window = 0.7;
        iv.modified_mu = 5.5;
        truth.interventions.push_back(iv);
    }
};

// Covariate drives both the cause and the outcome; a baseline-kind
// intervention shifts the outcome rate while cause+intervention windows
// overlap. Type ids: 0 cause, 1 covariate, 2 outcome, 3 intervention.
struct ConfoundedFixture {
    ctpp::Taxonomy taxonomy = ctpp::make_taxonomy(1, 1, 1, 1);
    ctpp::GroundTruth truth;

    explicit ConfoundedFixture(std::uint64_t seed = 1) {
        truth.hawkes.baselines = {0.2, 0.6, 0.4, 0.0};
        truth.hawkes.kernels.assign(4, std::vector<ctpp::ExpKernel>(4));
        truth.hawkes.kernels[0][1] = {3.0, 2.0};  // covariate excites cause
        truth.hawkes.kernels[2][1] = {2.0, 2.0};  // covariate excites outcome
        truth.cause_window = 0.5;
        truth.master_seed = seed;
        ctpp::InterventionSpec iv;
        iv.intervention_type = 3;
        iv.kind = ctpp::InterventionKind::Baseline;
        iv.cause = 0;
        iv.outcome = 2;
        iv.occurrence_prob = 0.6;
        iv.window = 0.7;
        iv.modified_mu = 1.2;  // tau(1) = 0.8
        truth.interventions.push_back(iv);
    }
};

}  // namespace testutil
