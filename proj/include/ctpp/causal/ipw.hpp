#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctpp/causal/propensity.hpp"
#include "ctpp/core/types.hpp"

namespace ctpp {

// Signed inverse-probability weight:
//   +1/e        when (c, v_obs) = (1, v_target),
//   -1/(1 - e)  when (c, v_obs) = (0, v_target),
//    0          otherwise.
// The caller supplies the propensity of the observed assignment class; for the
// control branch that means passing e with 1 - e equal to the control-class
// duration ratio (see estimate_ate).
double ipw_weight(int c, int v_obs, int v_target, double e);

// Outcome-intensity source for the estimators. (cell_lo, cell_hi] brackets a
// region that the caller guarantees contains no event and no window boundary
// of the queried pair; implementations resolve window state at the cell
// midpoint and kernel ages at the exact query time.
class IntensityProvider {
public:
    virtual ~IntensityProvider() = default;
    virtual double at(int seq_index, double t, double cell_lo, double cell_hi) const = 0;
};

struct EstimateOptions {
    // Quadrature step for the intensity integral; 0 selects half the minimum
    // inter-event gap per sequence. Cells are always refined at indicator
    // breakpoints and event times, so the piecewise-constant weight is exact.
    double grid_dt = 0.0;
    int jobs = 1;
};

struct ATEReport {
    int cause = -1, outcome = -1, intervention = -1;
    double tau_hat[2] = {0.0, 0.0};
    std::vector<double> per_sequence[2];
    double grid_dt_used = 0.0;
    long fallback_cells = 0;  // cells served by the marginal propensity
    int strata_count = 0;
    double epsilon = 0.0;
    OverlapReport overlap;  // filled at the table's clipping epsilon
};

// IPW estimator: tau_hat(v) = mean over sequences of
// (1/T) * integral of alpha_t(v) * lambda(t) dt, with the weight piecewise
// constant on indicator cells and lambda integrated by the trapezoid rule.
ATEReport estimate_ate(const std::vector<EventSequence>& data,
                       const Taxonomy& taxonomy, const IntensityProvider& intensity,
                       const PropensityTable& table, const WindowConfig& windows,
                       int cause, int outcome, int intervention_type,
                       const EstimateOptions& options);

// Unadjusted comparator: duration-weighted mean of lambda over {c=1, v} minus
// over {c=0, v}, pooled across sequences. Missing groups yield nullopt.
struct NaiveAteResult {
    std::optional<double> diff[2];
};

NaiveAteResult naive_ate(const std::vector<EventSequence>& data,
                         const Taxonomy& taxonomy, const IntensityProvider& intensity,
                         const WindowConfig& windows, int cause, int outcome,
                         int intervention_type, const EstimateOptions& options);

void write_ate_report(const std::string& path, const ATEReport& report);

}  // namespace ctpp
