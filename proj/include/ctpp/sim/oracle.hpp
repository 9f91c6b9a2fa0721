#pragma once

#include <cstdint>

#include "ctpp/core/types.hpp"
#include "ctpp/sim/simulate.hpp"
#include "ctpp/sim/spec.hpp"

namespace ctpp {

struct AteValue {
    double tau = 0.0;
    double se = 0.0;
};

struct OracleOptions {
    int mc_sequences = 200;
    double horizon_T = 20.0;
    double grid_dt = 0.02;
    std::uint64_t seed = 1;
    int jobs = 1;
    SimOptions sim;
};

// Monte-Carlo evaluation of the estimand on the known data-generating process:
// tau(v) = E[(1/T) * integral of lambda^(1,v)(t) - lambda^(0,v)(t) dt], where
// lambda^(c,v) is the parametric outcome CIF with the queried pair's cause and
// intervention window states forced to (c, v) at every t, all other history
// held fixed. Forcing c = 0 additionally removes the in-window contribution of
// cause-type events; other interventions keep their factual activation state.
// For Baseline-kind targets the integrand reduces to mu' - mu on the forced-on
// branch, so the value is exact up to rounding.
AteValue true_ate_oracle(const GroundTruth& truth, const Taxonomy& taxonomy,
                         int cause, int outcome, int intervention_type, int v,
                         const OracleOptions& options);

}  // namespace ctpp
