#include "ctpp/causal/propensity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ctpp/core/error.hpp"
#include "ctpp/core/indicators.hpp"
#include "ctpp/core/log.hpp"

namespace ctpp {

namespace {

double clip(double x, double eps) { return std::clamp(x, eps, 1.0 - eps); }

}  // namespace

PropensityTable::Lookup PropensityTable::propensity(std::uint64_t pattern, int c,
                                                    int v) const {
    auto it = strata.find(pattern);
    if (it != strata.end() && it->second.total > 0.0)
        return {clip(it->second.dur[c][v] / it->second.total, epsilon), false};
    if (!(marginal.total > 0.0))
        throw EstimationError("propensity table is empty");
    return {clip(marginal.dur[c][v] / marginal.total, epsilon), true};
}

double PropensityTable::raw(std::uint64_t pattern, int c, int v) const {
    auto it = strata.find(pattern);
    if (it == strata.end() || !(it->second.total > 0.0))
        return std::numeric_limits<double>::quiet_NaN();
    return it->second.dur[c][v] / it->second.total;
}

PropensityTable estimate_propensity(const std::vector<EventSequence>& data,
                                    const Taxonomy& taxonomy,
                                    const WindowConfig& windows, int cause,
                                    int intervention_type,
                                    const std::vector<int>& covariate_ids,
                                    double epsilon, double min_stratum_duration) {
    if (data.empty()) throw EstimationError("propensity estimation needs >= 1 sequence");
    windows.validate();
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw ArgumentError("clipping epsilon must lie in (0, 0.5)");
    for (int id : covariate_ids) {
        taxonomy.require(id);
        if (id == cause || id == intervention_type)
            throw ConfigError("covariate ids must exclude the cause and intervention");
    }

    PropensityTable table;
    table.covariate_ids = covariate_ids;
    table.epsilon = epsilon;

    for (const auto& seq : data) {
        const IntervalSet c_set =
            indicator_set(seq, taxonomy, {cause}, windows.cause_window);
        const IntervalSet v_set = indicator_set(seq, taxonomy, {intervention_type},
                                                windows.intervention_window);
        const PatternTimeline x_tl =
            covariate_pattern_timeline(seq, taxonomy, covariate_ids, windows.cause_window);

        std::vector<double> edges{0.0, seq.horizon_T};
        for (double b : c_set.breakpoints())
            if (b > 0.0 && b < seq.horizon_T) edges.push_back(b);
        for (double b : v_set.breakpoints())
            if (b > 0.0 && b < seq.horizon_T) edges.push_back(b);
        for (double b : x_tl.edges)
            if (b > 0.0 && b < seq.horizon_T) edges.push_back(b);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const double len = edges[i + 1] - edges[i];
            const double mid = 0.5 * (edges[i] + edges[i + 1]);
            const int c = c_set.contains(mid) ? 1 : 0;
            const int v = v_set.contains(mid) ? 1 : 0;
            const std::uint64_t x = x_tl.pattern_at(mid);
            auto& cell = table.strata[x];
            cell.dur[c][v] += len;
            cell.total += len;
            table.marginal.dur[c][v] += len;
            table.marginal.total += len;
        }
        table.total_duration += seq.horizon_T;
    }

    for (auto it = table.strata.begin(); it != table.strata.end();) {
        if (it->second.total < min_stratum_duration) {
            log::warn("propensity_stratum_dropped", "pattern", it->first, "duration",
                      it->second.total);
            ++table.dropped_strata;
            it = table.strata.erase(it);
        } else {
            ++it;
        }
    }
    if (table.strata.empty())
        throw EstimationError("all propensity strata dropped (min duration " +
                              std::to_string(min_stratum_duration) + ")");
    return table;
}

OverlapReport check_overlap(const PropensityTable& table, double epsilon) {
    OverlapReport report;
    report.epsilon = epsilon;
    report.pass = true;
    for (const auto& [pattern, cell] : table.strata) {
        for (int v = 0; v < 2; ++v) {
            const double e = cell.dur[1][v] / cell.total;
            report.min_e = std::min(report.min_e, e);
            report.max_e = std::max(report.max_e, e);
            if (!(e > epsilon && e < 1.0 - epsilon)) {
                report.pass = false;
                report.violations.push_back({pattern, v, e});
            }
        }
    }
    return report;
}

}  // namespace ctpp
