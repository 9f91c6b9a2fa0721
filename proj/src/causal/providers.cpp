#include "ctpp/causal/providers.hpp"

#include <algorithm>
#include <limits>

#include "ctpp/core/indicators.hpp"
#include "ctpp/sim/cif.hpp"

namespace ctpp {

OracleIntensityProvider::OracleIntensityProvider(
    const GroundTruth& truth, const Taxonomy& taxonomy,
    const std::vector<EventSequence>& sequences, int outcome)
    : truth_(&truth), sequences_(&sequences), outcome_(outcome) {
    cutoff_age_ = EffectiveCif(truth).cutoff_age();
    windows_.resize(sequences.size());
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        auto& w = windows_[i];
        for (const auto& iv : truth.interventions) {
            w.v_active.push_back(indicator_set(sequences[i], taxonomy,
                                               {iv.intervention_type}, iv.window));
            w.c_active.push_back(
                indicator_set(sequences[i], taxonomy, {iv.cause}, truth.cause_window));
        }
    }
}

double OracleIntensityProvider::at(int seq_index, double t, double cell_lo,
                                   double cell_hi) const {
    const EventSequence& seq = (*sequences_)[static_cast<std::size_t>(seq_index)];
    const SeqWindows& w = windows_[static_cast<std::size_t>(seq_index)];
    const double mid = 0.5 * (cell_lo + cell_hi);

    double mu = truth_->hawkes.baselines[static_cast<std::size_t>(outcome_)];
    double mu_key = -std::numeric_limits<double>::infinity();
    struct Override {
        int source;
        double key;
        ExpKernel kernel;
    };
    std::vector<Override> kernel_overrides;
    kernel_overrides.reserve(4);

    for (std::size_t j = 0; j < truth_->interventions.size(); ++j) {
        const auto& iv = truth_->interventions[j];
        if (iv.outcome != outcome_) continue;
        if (!w.v_active[j].contains(mid) || !w.c_active[j].contains(mid)) continue;
        double key = 0.0;
        for (const auto& part : w.v_active[j].intervals())
            if (part.lo < mid && mid <= part.hi) key = part.lo;
        if (iv.kind == InterventionKind::Baseline) {
            if (key > mu_key) {
                mu_key = key;
                mu = iv.modified_mu;
            }
        } else {
            const int src = iv.kernel_source();
            auto it = std::find_if(kernel_overrides.begin(), kernel_overrides.end(),
                                   [src](const Override& o) { return o.source == src; });
            if (it == kernel_overrides.end())
                kernel_overrides.push_back({src, key, iv.modified_kernel});
            else if (key > it->key)
                *it = {src, key, iv.modified_kernel};
        }
    }

    double acc = mu;
    // Events strictly inside the cell are excluded by construction; the event
    // at cell_lo, if any, contributes its full jump.
    auto end = std::upper_bound(seq.events.begin(), seq.events.end(), cell_lo,
                                [](double x, const Event& e) { return x < e.t; });
    for (auto it = end; it != seq.events.begin();) {
        --it;
        const double age = t - it->t;
        if (age > cutoff_age_) break;
        const ExpKernel* ker = &truth_->hawkes.kernel(outcome_, it->type);
        for (const auto& o : kernel_overrides)
            if (o.source == it->type) {
                ker = &o.kernel;
                break;
            }
        if (ker->a > 0.0) acc += ker->value(age);
    }
    return acc;
}

}  // namespace ctpp
