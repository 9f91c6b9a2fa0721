#pragma once

#include <vector>

#include "ctpp/core/rng.hpp"
#include "ctpp/core/types.hpp"
#include "ctpp/sim/spec.hpp"

namespace ctpp {

struct KindMix {
    int baseline = 0;
    int cause = 0;
    int covariate = 0;
    int total() const { return baseline + cause + covariate; }
};

struct GenerationRanges {
    double mu_min = 0.3, mu_max = 1.0;
    double edge_prob = 0.1;             // kernel sparsity between non-intervention types
    double a_min = 0.2, a_max = 0.8;
    double b_min = 1.0, b_max = 3.0;
    double p_min = 0.3, p_max = 0.7;    // intervention trigger rates
    double wv_min = 0.5, wv_max = 1.0;  // intervention windows
    double mu_factor_min = 1.5, mu_factor_max = 4.0;   // baseline edits: mu' = f * mu
    double new_kernel_a_min = 1.0, new_kernel_a_max = 3.0;  // zero -> nonzero edits
    double max_branching = 0.9;         // rescale amplitudes above this radius
};

// Type ids laid out as causes, covariates, outcomes, interventions.
Taxonomy make_taxonomy(int n_cause, int n_covariate, int n_outcome,
                       int n_interventions);

HawkesSpec generate_hawkes(const Taxonomy& taxonomy, const GenerationRanges& ranges,
                           Rng& rng);

// n = kind_mix.total() intervention specs with randomly chosen cause-outcome
// targets, trigger rates and windows from the configured ranges, and modified
// values per kind (mu -> mu', phi -> phi' by zeroing or introducing an edge).
std::vector<InterventionSpec> generate_interventions(const Taxonomy& taxonomy,
                                                     const HawkesSpec& hawkes,
                                                     const KindMix& kind_mix,
                                                     const GenerationRanges& ranges,
                                                     Rng& rng);

}  // namespace ctpp
