#include "ctpp/core/indicators.hpp"

#include <algorithm>
#include <cmath>

#include "ctpp/core/error.hpp"

namespace ctpp {

void EventSequence::validate(const Taxonomy* taxonomy) const {
    if (!(horizon_T > 0.0))
        throw ConfigError("sequence " + seq_id + ": horizon must be > 0");
    double prev = -1.0;
    for (const auto& e : events) {
        if (!(e.t >= 0.0) || !(e.t < horizon_T))
            throw ConfigError("sequence " + seq_id + ": event time " +
                              std::to_string(e.t) + " outside [0, T)");
        if (!(e.t > prev) && prev >= 0.0)
            throw ConfigError("sequence " + seq_id +
                              ": timestamps must be strictly increasing");
        prev = e.t;
        if (taxonomy) taxonomy->require(e.type);
    }
}

const char* role_name(Role r) {
    switch (r) {
        case Role::Cause: return "cause";
        case Role::Outcome: return "outcome";
        case Role::Intervention: return "intervention";
        case Role::Covariate: return "covariate";
    }
    return "?";
}

Role role_from_name(const std::string& name) {
    if (name == "cause") return Role::Cause;
    if (name == "outcome") return Role::Outcome;
    if (name == "intervention") return Role::Intervention;
    if (name == "covariate") return Role::Covariate;
    throw TaxonomyError("unknown role name '" + name + "'");
}

IntervalSet indicator_set(const EventSequence& seq, const Taxonomy& taxonomy,
                          const std::vector<int>& type_ids, double w) {
    if (!(w > 0.0)) throw ArgumentError("indicator window must be > 0");
    for (int id : type_ids) taxonomy.require(id);

    std::vector<IntervalSet::Interval> parts;
    for (const auto& e : seq.events) {
        if (std::find(type_ids.begin(), type_ids.end(), e.type) == type_ids.end())
            continue;
        const double hi = std::min(e.t + w, seq.horizon_T);
        if (e.t < hi) parts.push_back({e.t, hi});
    }
    return IntervalSet::from(std::move(parts));
}

std::uint64_t PatternTimeline::pattern_at(double t) const {
    // Piece i covers (edges[i], edges[i+1]].
    auto it = std::lower_bound(edges.begin() + 1, edges.end(), t);
    if (it == edges.end()) return patterns.back();
    const std::size_t i = static_cast<std::size_t>(it - edges.begin()) - 1;
    return patterns[std::min(i, patterns.size() - 1)];
}

PatternTimeline covariate_pattern_timeline(const EventSequence& seq,
                                           const Taxonomy& taxonomy,
                                           const std::vector<int>& covariate_ids,
                                           double w) {
    if (covariate_ids.size() > 64)
        throw ConfigError("at most 64 covariates supported per pattern timeline");

    std::vector<IntervalSet> sets;
    sets.reserve(covariate_ids.size());
    for (int id : covariate_ids)
        sets.push_back(indicator_set(seq, taxonomy, {id}, w));

    std::vector<double> edges{0.0, seq.horizon_T};
    for (const auto& s : sets)
        for (double b : s.breakpoints())
            if (b > 0.0 && b < seq.horizon_T) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    PatternTimeline out;
    out.edges.push_back(edges.front());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double mid = 0.5 * (edges[i] + edges[i + 1]);
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (sets[j].contains(mid)) bits |= (std::uint64_t{1} << j);
        if (!out.patterns.empty() && out.patterns.back() == bits) {
            out.edges.back() = edges[i + 1];  // merge equal neighbours
        } else {
            out.patterns.push_back(bits);
            out.edges.push_back(edges[i + 1]);
        }
    }
    if (out.patterns.empty()) {
        out.patterns.push_back(0);
        out.edges = {0.0, seq.horizon_T};
    }
    return out;
}

}  // namespace ctpp
