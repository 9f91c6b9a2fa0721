#pragma once

#include <limits>
#include <vector>

#include "ctpp/sim/spec.hpp"

namespace ctpp {

// Conditional intensity evaluation with intervention overrides applied on top
// of a base Hawkes spec. An applied intervention rewrites exactly one slot:
// the outcome's baseline (Baseline kind) or one kernel entry (Cause/Covariate
// kind). When two applied interventions hit the same slot, the larger order
// key wins and a collision is counted.
class EffectiveCif {
public:
    EffectiveCif(const GroundTruth& truth);

    void clear_mods();
    void apply(int intervention_index, double order_key);
    long collisions() const { return collisions_; }

    double mu(int type) const {
        const auto i = static_cast<std::size_t>(type);
        return mu_key_[i] > kNone ? mu_val_[i] : truth_->hawkes.baselines[i];
    }

    const ExpKernel& kernel(int target, int source) const {
        const auto i = slot(target, source);
        return ker_key_[i] > kNone ? ker_val_[i] : truth_->hawkes.kernel(target, source);
    }

    // lambda_e(t) from the event span [events, events + n). Events at or
    // before t contribute with tau = t - s >= 0; the caller controls boundary
    // inclusion by choosing the span.
    double intensity(int type, double t, const Event* events, std::size_t n) const;
    double total_intensity(double t, const Event* events, std::size_t n) const;

    // Past this age every kernel contribution is below ~1e-19 and is skipped.
    double cutoff_age() const { return cutoff_age_; }

private:
    static constexpr double kNone = -std::numeric_limits<double>::infinity();

    std::size_t slot(int target, int source) const {
        return static_cast<std::size_t>(target) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(source);
    }

    const GroundTruth* truth_;
    int n_;
    std::vector<double> mu_key_, mu_val_;
    std::vector<double> ker_key_;
    std::vector<ExpKernel> ker_val_;
    std::vector<std::size_t> touched_mu_, touched_ker_;
    long collisions_ = 0;
    double cutoff_age_ = 0.0;
};

}  // namespace ctpp
