#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctpp/core/types.hpp"

namespace ctpp {

// Exponential excitation kernel phi(tau) = a * exp(-b * tau) for tau >= 0.
struct ExpKernel {
    double a = 0.0;
    double b = 1.0;

    double value(double tau) const {
        return tau >= 0.0 ? a * std::exp(-b * tau) : 0.0;
    }
    double mass() const { return a / b; }
    bool is_zero() const { return a == 0.0; }

    bool operator==(const ExpKernel&) const = default;
};

struct HawkesSpec {
    std::vector<double> baselines;                 // mu per type
    std::vector<std::vector<ExpKernel>> kernels;   // [target][source]

    int n_types() const { return static_cast<int>(baselines.size()); }
    const ExpKernel& kernel(int target, int source) const {
        return kernels[static_cast<std::size_t>(target)][static_cast<std::size_t>(source)];
    }

    // Spectral radius of the branching matrix (a/b entries), by power iteration.
    double branching_radius() const;
    void validate() const;  // mu >= 0, b > 0, radius < 1

    bool operator==(const HawkesSpec&) const = default;
};

enum class InterventionKind { Baseline, Cause, Covariate };

const char* kind_name(InterventionKind k);
InterventionKind kind_from_name(const std::string& name);

// One out-of-domain intervention: an exogenous event type whose activation
// window, when it overlaps an active cause window, rewrites one parameter of
// the outcome's CIF.
struct InterventionSpec {
    int intervention_type = -1;
    InterventionKind kind = InterventionKind::Baseline;
    int cause = -1;
    int outcome = -1;
    int covariate = -1;           // only for Covariate kind
    double occurrence_prob = 0.0; // trigger rate per unit time while inactive
    double window = 0.0;          // w_v
    double modified_mu = 0.0;     // Baseline kind: mu -> mu'
    ExpKernel modified_kernel;    // Cause/Covariate kind: phi -> phi'

    // Source type whose kernel into `outcome` this intervention rewrites;
    // -1 for Baseline kind.
    int kernel_source() const {
        if (kind == InterventionKind::Cause) return cause;
        if (kind == InterventionKind::Covariate) return covariate;
        return -1;
    }

    void validate(const Taxonomy& taxonomy) const;

    bool operator==(const InterventionSpec&) const = default;
};

struct PairAte {
    int cause = -1;
    int outcome = -1;
    int intervention = -1;
    double tau0 = 0.0, tau1 = 0.0;
    double se0 = 0.0, se1 = 0.0;

    bool operator==(const PairAte&) const = default;
};

// Full generative ground truth: reproducible given master_seed.
struct GroundTruth {
    HawkesSpec hawkes;
    std::vector<InterventionSpec> interventions;
    double cause_window = 0.5;
    std::uint64_t master_seed = 0;
    // Law of the intervention activation clock, recorded so the oracle and
    // any re-implementation sample the same process.
    std::string trigger_law = "poisson-rate-p-while-inactive";
    std::optional<std::vector<PairAte>> true_ate;

    void validate(const Taxonomy& taxonomy) const;

    bool operator==(const GroundTruth&) const = default;
};

// truth.json round-trip.
void write_truth(const std::string& path, const GroundTruth& truth);
GroundTruth read_truth(const std::string& path);

}  // namespace ctpp
