#pragma once

#include <cstdint>
#include <vector>

#include "ctpp/core/rng.hpp"
#include "ctpp/core/types.hpp"
#include "ctpp/sim/spec.hpp"

namespace ctpp {

struct SimOptions {
    long max_events = 500000;  // per sequence; exceeded -> SimulationError
    int jobs = 1;              // threads for dataset-level parallelism
};

struct SimStats {
    long override_collisions = 0;
};

// One sequence by thinning against the current total CIF (plus the constant
// trigger rates of inactive interventions). The bound is recomputed after
// every candidate, accepted event, and window-state change; between those the
// CIF is non-increasing, so the bound is exact.
EventSequence simulate_one(const GroundTruth& truth, const Taxonomy& taxonomy,
                           double horizon_T, const std::string& seq_id, Rng rng,
                           const SimOptions& opts, SimStats* stats = nullptr);

// Dataset simulation. Sequence i uses the RNG stream
// Rng::stream(truth.master_seed, seq_seed_offset + i), so the parallel and
// serial paths produce identical output.
std::vector<EventSequence> simulate_dataset(const GroundTruth& truth,
                                            const Taxonomy& taxonomy,
                                            int n_sequences, double horizon_T,
                                            std::uint64_t seq_seed_offset,
                                            const SimOptions& opts);

// Reference implementation: plain loop, no threading. Kept for testing and
// benchmarked against the parallel path.
std::vector<EventSequence> simulate_dataset_serial(const GroundTruth& truth,
                                                   const Taxonomy& taxonomy,
                                                   int n_sequences, double horizon_T,
                                                   std::uint64_t seq_seed_offset,
                                                   const SimOptions& opts);

// Tunes a horizon so the expected sequence length is close to target_length,
// by bisection on simulated mean counts at a coarse probe budget.
double tune_horizon_for_length(const GroundTruth& truth, const Taxonomy& taxonomy,
                               double target_length, const SimOptions& opts);

}  // namespace ctpp
