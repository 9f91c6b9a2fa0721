#include "ctpp/sim/cif.hpp"

#include <algorithm>
#include <cmath>

namespace ctpp {

namespace {
// exp(-45) ~ 2.9e-20; kernel tails below that are ignored.
constexpr double kLogCutoff = 45.0;
}

EffectiveCif::EffectiveCif(const GroundTruth& truth)
    : truth_(&truth), n_(truth.hawkes.n_types()) {
    const auto nn = static_cast<std::size_t>(n_);
    mu_key_.assign(nn, kNone);
    mu_val_.assign(nn, 0.0);
    ker_key_.assign(nn * nn, kNone);
    ker_val_.assign(nn * nn, ExpKernel{});

    double min_decay = std::numeric_limits<double>::infinity();
    for (const auto& row : truth.hawkes.kernels)
        for (const auto& k : row)
            if (k.a > 0.0) min_decay = std::min(min_decay, k.b);
    for (const auto& iv : truth.interventions)
        if (iv.kind != InterventionKind::Baseline && iv.modified_kernel.a > 0.0)
            min_decay = std::min(min_decay, iv.modified_kernel.b);
    cutoff_age_ = std::isfinite(min_decay) ? kLogCutoff / min_decay : 0.0;
}

void EffectiveCif::clear_mods() {
    for (std::size_t i : touched_mu_) mu_key_[i] = kNone;
    for (std::size_t i : touched_ker_) ker_key_[i] = kNone;
    touched_mu_.clear();
    touched_ker_.clear();
}

void EffectiveCif::apply(int intervention_index, double order_key) {
    const auto& iv = truth_->interventions[static_cast<std::size_t>(intervention_index)];
    if (iv.kind == InterventionKind::Baseline) {
        const auto i = static_cast<std::size_t>(iv.outcome);
        if (mu_key_[i] > kNone) {
            ++collisions_;
            if (order_key <= mu_key_[i]) return;
        } else {
            touched_mu_.push_back(i);
        }
        mu_key_[i] = order_key;
        mu_val_[i] = iv.modified_mu;
    } else {
        const auto i = slot(iv.outcome, iv.kernel_source());
        if (ker_key_[i] > kNone) {
            ++collisions_;
            if (order_key <= ker_key_[i]) return;
        } else {
            touched_ker_.push_back(i);
        }
        ker_key_[i] = order_key;
        ker_val_[i] = iv.modified_kernel;
    }
}

double EffectiveCif::intensity(int type, double t, const Event* events,
                               std::size_t n) const {
    double acc = mu(type);
    for (std::size_t k = n; k-- > 0;) {
        const double age = t - events[k].t;
        if (age > cutoff_age_) break;
        const ExpKernel& ker = kernel(type, events[k].type);
        if (ker.a > 0.0) acc += ker.value(age);
    }
    return acc;
}

double EffectiveCif::total_intensity(double t, const Event* events,
                                     std::size_t n) const {
    double acc = 0.0;
    for (int e = 0; e < n_; ++e) acc += mu(e);
    for (std::size_t k = n; k-- > 0;) {
        const double age = t - events[k].t;
        if (age > cutoff_age_) break;
        for (int e = 0; e < n_; ++e) {
            const ExpKernel& ker = kernel(e, events[k].type);
            if (ker.a > 0.0) acc += ker.value(age);
        }
    }
    return acc;
}

}  // namespace ctpp
