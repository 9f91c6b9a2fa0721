#include "ctpp/causal/ipw.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "ctpp/core/error.hpp"
#include "ctpp/core/indicators.hpp"
#include "ctpp/core/io.hpp"

namespace ctpp {

double ipw_weight(int c, int v_obs, int v_target, double e) {
    if (!(e > 0.0 && e < 1.0))
        throw ArgumentError("ipw_weight: propensity must lie in (0, 1), got " +
                            std::to_string(e));
    if (v_obs != v_target) return 0.0;
    return c == 1 ? 1.0 / e : -1.0 / (1.0 - e);
}

namespace {

struct Cell {
    double lo = 0.0, hi = 0.0;
    int c = 0, v = 0;
    std::uint64_t x = 0;
};

// Cells partition (0, T], refined at every indicator breakpoint and event
// time, so window state is constant per cell.
std::vector<Cell> base_cells(const EventSequence& seq, const Taxonomy& taxonomy,
                             const WindowConfig& windows, int cause,
                             int intervention_type,
                             const std::vector<int>& covariate_ids) {
    const IntervalSet c_set =
        indicator_set(seq, taxonomy, {cause}, windows.cause_window);
    const IntervalSet v_set = indicator_set(seq, taxonomy, {intervention_type},
                                            windows.intervention_window);
    const PatternTimeline x_tl =
        covariate_pattern_timeline(seq, taxonomy, covariate_ids, windows.cause_window);

    std::vector<double> edges{0.0, seq.horizon_T};
    auto push = [&](double b) {
        if (b > 0.0 && b < seq.horizon_T) edges.push_back(b);
    };
    for (double b : c_set.breakpoints()) push(b);
    for (double b : v_set.breakpoints()) push(b);
    for (double b : x_tl.edges) push(b);
    for (const auto& e : seq.events) push(e.t);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Cell> cells;
    cells.reserve(edges.size());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Cell cell;
        cell.lo = edges[i];
        cell.hi = edges[i + 1];
        const double mid = 0.5 * (cell.lo + cell.hi);
        cell.c = c_set.contains(mid) ? 1 : 0;
        cell.v = v_set.contains(mid) ? 1 : 0;
        cell.x = x_tl.pattern_at(mid);
        cells.push_back(cell);
    }
    return cells;
}

double pick_grid_dt(const EventSequence& seq, double requested) {
    if (requested > 0.0) return requested;
    double min_gap = seq.horizon_T / 8.0;
    for (std::size_t i = 0; i + 1 < seq.events.size(); ++i)
        min_gap = std::min(min_gap, seq.events[i + 1].t - seq.events[i].t);
    return std::max(min_gap / 2.0, seq.horizon_T * 1e-9);
}

// Composite trapezoid over (lo, hi] with nodes no further apart than grid_dt.
double integrate_cell(const IntensityProvider& intensity, int seq_index,
                      const Cell& cell, double grid_dt) {
    const long pieces =
        std::max(1L, std::lround(std::ceil((cell.hi - cell.lo) / grid_dt)));
    const double h = (cell.hi - cell.lo) / static_cast<double>(pieces);
    double acc = 0.0;
    double prev = intensity.at(seq_index, cell.lo, cell.lo, cell.hi);
    for (long p = 1; p <= pieces; ++p) {
        const double t = (p == pieces) ? cell.hi : cell.lo + h * static_cast<double>(p);
        const double cur = intensity.at(seq_index, t, cell.lo, cell.hi);
        acc += 0.5 * (prev + cur) * h;
        prev = cur;
    }
    return acc;
}

}  // namespace

ATEReport estimate_ate(const std::vector<EventSequence>& data,
                       const Taxonomy& taxonomy, const IntensityProvider& intensity,
                       const PropensityTable& table, const WindowConfig& windows,
                       int cause, int outcome, int intervention_type,
                       const EstimateOptions& options) {
    if (data.empty()) throw EstimationError("estimate_ate needs >= 1 sequence");
    taxonomy.require(outcome);

    const int n = static_cast<int>(data.size());
    ATEReport report;
    report.cause = cause;
    report.outcome = outcome;
    report.intervention = intervention_type;
    report.epsilon = table.epsilon;
    report.strata_count = static_cast<int>(table.strata.size());
    report.per_sequence[0].assign(static_cast<std::size_t>(n), 0.0);
    report.per_sequence[1].assign(static_cast<std::size_t>(n), 0.0);
    report.grid_dt_used = options.grid_dt;
    long fallbacks = 0;

#pragma omp parallel for schedule(dynamic) \
    num_threads(options.jobs > 0 ? options.jobs : 1) reduction(+ : fallbacks)
    for (int i = 0; i < n; ++i) {
        const EventSequence& seq = data[static_cast<std::size_t>(i)];
        const double grid_dt = pick_grid_dt(seq, options.grid_dt);
        double contrib[2] = {0.0, 0.0};
        for (const Cell& cell : base_cells(seq, taxonomy, windows, cause,
                                           intervention_type, table.covariate_ids)) {
            // The observed v picks which tau_hat(v) this cell feeds.
            const auto lookup = table.propensity(cell.x, cell.c, cell.v);
            fallbacks += lookup.fell_back ? 1 : 0;
            const double alpha =
                cell.c == 1 ? ipw_weight(1, cell.v, cell.v, lookup.e)
                            : ipw_weight(0, cell.v, cell.v, 1.0 - lookup.e);
            const double integral = integrate_cell(intensity, i, cell, grid_dt);
            contrib[cell.v] += alpha * integral;
        }
        report.per_sequence[0][static_cast<std::size_t>(i)] =
            contrib[0] / seq.horizon_T;
        report.per_sequence[1][static_cast<std::size_t>(i)] =
            contrib[1] / seq.horizon_T;
    }

    for (int v = 0; v < 2; ++v) {
        double acc = 0.0;
        for (double x : report.per_sequence[v]) acc += x;
        report.tau_hat[v] = acc / static_cast<double>(n);
        if (!std::isfinite(report.tau_hat[v]))
            throw EstimationError("non-finite ATE estimate for v=" + std::to_string(v));
    }
    report.fallback_cells = fallbacks;
    report.overlap = check_overlap(table, table.epsilon);
    return report;
}

NaiveAteResult naive_ate(const std::vector<EventSequence>& data,
                         const Taxonomy& taxonomy, const IntensityProvider& intensity,
                         const WindowConfig& windows, int cause, int outcome,
                         int intervention_type, const EstimateOptions& options) {
    if (data.empty()) throw EstimationError("naive_ate needs >= 1 sequence");
    taxonomy.require(outcome);

    double num[2][2] = {{0.0, 0.0}, {0.0, 0.0}};  // [v][c]
    double den[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    const int n = static_cast<int>(data.size());
    std::vector<std::array<double, 8>> parts(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(dynamic) \
    num_threads(options.jobs > 0 ? options.jobs : 1)
    for (int i = 0; i < n; ++i) {
        const EventSequence& seq = data[static_cast<std::size_t>(i)];
        const double grid_dt = pick_grid_dt(seq, options.grid_dt);
        std::array<double, 8> acc{};
        for (const Cell& cell :
             base_cells(seq, taxonomy, windows, cause, intervention_type, {})) {
            const double integral = integrate_cell(intensity, i, cell, grid_dt);
            acc[static_cast<std::size_t>(cell.v * 2 + cell.c)] += integral;
            acc[static_cast<std::size_t>(4 + cell.v * 2 + cell.c)] += cell.hi - cell.lo;
        }
        parts[static_cast<std::size_t>(i)] = acc;
    }
    for (const auto& acc : parts)
        for (int v = 0; v < 2; ++v)
            for (int c = 0; c < 2; ++c) {
                num[v][c] += acc[static_cast<std::size_t>(v * 2 + c)];
                den[v][c] += acc[static_cast<std::size_t>(4 + v * 2 + c)];
            }

    NaiveAteResult out;
    for (int v = 0; v < 2; ++v)
        if (den[v][1] > 0.0 && den[v][0] > 0.0)
            out.diff[v] = num[v][1] / den[v][1] - num[v][0] / den[v][0];
    return out;
}

void write_ate_report(const std::string& path, const ATEReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& viol : report.overlap.violations)
        violations.push_back(
            {{"pattern", viol.pattern}, {"v", viol.v}, {"value", viol.value}});
    nlohmann::json obj{
        {"pair",
         {{"cause", report.cause},
          {"outcome", report.outcome},
          {"intervention", report.intervention}}},
        {"tau_hat", {{"v0", report.tau_hat[0]}, {"v1", report.tau_hat[1]}}},
        {"per_sequence", {{"v0", report.per_sequence[0]}, {"v1", report.per_sequence[1]}}},
        {"grid_dt", report.grid_dt_used},
        {"fallback_cells", report.fallback_cells},
        {"strata_count", report.strata_count},
        {"epsilon", report.epsilon},
        {"overlap",
         {{"pass", report.overlap.pass},
          {"epsilon", report.overlap.epsilon},
          {"min_e", report.overlap.min_e},
          {"max_e", report.overlap.max_e},
          {"violations", violations}}}};
    write_text_file(path, obj.dump(2) + "\n");
}

}  // namespace ctpp
