#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ctpp/core/types.hpp"

namespace ctpp {

// Raw joint durations for one covariate stratum. dur[c][v] is the total time
// measure with cause indicator c and intervention indicator v; total is the
// stratum's duration, so dur entries sum to total.
struct PropensityCell {
    double dur[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double total = 0.0;
};

// Duration-ratio propensity estimates per covariate bit-pattern, pooled over
// all sequences. The assignment propensity of class (c, v) in stratum x is
// dur[c][v] / total, clipped to [epsilon, 1 - epsilon] at lookup.
struct PropensityTable {
    std::vector<int> covariate_ids;  // bit order of the pattern key
    std::map<std::uint64_t, PropensityCell> strata;
    PropensityCell marginal;  // pooled over every stratum, kept as fallback
    double epsilon = 0.01;
    double total_duration = 0.0;
    int dropped_strata = 0;

    struct Lookup {
        double e = 0.0;
        bool fell_back = false;
    };

    Lookup propensity(std::uint64_t pattern, int c, int v) const;
    // Unclipped ratio for diagnostics; NaN when the stratum is missing.
    double raw(std::uint64_t pattern, int c, int v) const;
};

// Exact evaluation of the duration-ratio estimator: for every covariate
// pattern x and assignment (c, v), the time measure of {c, v, x} over the
// measure of {x}, computed by interval intersection (no quadrature). Strata
// with total duration below min_stratum_duration are dropped with a warning
// and served by the marginal fallback.
PropensityTable estimate_propensity(const std::vector<EventSequence>& data,
                                    const Taxonomy& taxonomy,
                                    const WindowConfig& windows, int cause,
                                    int intervention_type,
                                    const std::vector<int>& covariate_ids,
                                    double epsilon = 0.01,
                                    double min_stratum_duration = 0.0);

struct OverlapViolation {
    std::uint64_t pattern = 0;
    int v = 0;
    double value = 0.0;
};

struct OverlapReport {
    bool pass = false;
    double epsilon = 0.0;
    double min_e = 1.0, max_e = 0.0;
    std::vector<OverlapViolation> violations;
};

// Assumption check: every retained stratum must have raw e(v) strictly inside
// (epsilon, 1 - epsilon) for both v.
OverlapReport check_overlap(const PropensityTable& table, double epsilon);

}  // namespace ctpp
