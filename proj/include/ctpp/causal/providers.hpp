#pragma once

#include <functional>
#include <vector>

#include "ctpp/causal/ipw.hpp"
#include "ctpp/core/interval_set.hpp"
#include "ctpp/sim/spec.hpp"

namespace ctpp {

// Ground-truth outcome intensity reconstructed from the emitted sequences:
// window states come from the recorded cause/intervention events, parameter
// overrides from the truth's intervention specs (later activation wins on a
// shared slot). Reentrant; estimate_ate may call it from multiple threads.
class OracleIntensityProvider : public IntensityProvider {
public:
    OracleIntensityProvider(const GroundTruth& truth, const Taxonomy& taxonomy,
                            const std::vector<EventSequence>& sequences, int outcome);

    double at(int seq_index, double t, double cell_lo, double cell_hi) const override;

private:
    struct SeqWindows {
        std::vector<IntervalSet> v_active;
        std::vector<IntervalSet> c_active;
    };

    const GroundTruth* truth_;
    const std::vector<EventSequence>* sequences_;
    int outcome_;
    double cutoff_age_;
    std::vector<SeqWindows> windows_;
};

class ConstantIntensityProvider : public IntensityProvider {
public:
    explicit ConstantIntensityProvider(double value) : value_(value) {}
    double at(int, double, double, double) const override { return value_; }

private:
    double value_;
};

class CallableIntensityProvider : public IntensityProvider {
public:
    using Fn = std::function<double(int, double)>;
    explicit CallableIntensityProvider(Fn fn) : fn_(std::move(fn)) {}
    double at(int seq_index, double t, double, double) const override {
        return fn_(seq_index, t);
    }

private:
    Fn fn_;
};

}  // namespace ctpp
