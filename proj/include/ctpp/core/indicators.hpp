#pragma once

#include <cstdint>
#include <vector>

#include "ctpp/core/interval_set.hpp"
#include "ctpp/core/types.hpp"

namespace ctpp {

// Times t at which at least one event of a listed type occurred in [t-w, t).
// Equivalently the union over matching events at time s of (s, s+w], clipped
// to (0, horizon_T].
IntervalSet indicator_set(const EventSequence& seq, const Taxonomy& taxonomy,
                          const std::vector<int>& type_ids, double w);

// Piecewise-constant bit-vector timeline over (0, T]: bit j of a piece is the
// j-th covariate's window indicator on that piece. Pieces partition (0, T].
struct PatternTimeline {
    // edges.front() == 0, edges.back() == T; piece i covers
    // (edges[i], edges[i+1]] with bit pattern patterns[i].
    std::vector<double> edges;
    std::vector<std::uint64_t> patterns;

    std::size_t piece_count() const { return patterns.size(); }
    std::uint64_t pattern_at(double t) const;
    double piece_measure(std::size_t i) const { return edges[i + 1] - edges[i]; }
};

PatternTimeline covariate_pattern_timeline(const EventSequence& seq,
                                           const Taxonomy& taxonomy,
                                           const std::vector<int>& covariate_ids,
                                           double w);

}  // namespace ctpp
