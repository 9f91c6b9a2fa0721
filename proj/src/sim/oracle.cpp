#include "ctpp/sim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ctpp/core/error.hpp"
#include "ctpp/core/indicators.hpp"
#include "ctpp/sim/cif.hpp"

namespace ctpp {

namespace {

constexpr double kForcedKey = std::numeric_limits<double>::infinity();

double covering_start(const IntervalSet& set, double t) {
    for (const auto& iv : set.intervals())
        if (iv.lo < t && t <= iv.hi) return iv.lo;
    return -kForcedKey;
}

// Outcome intensity with optional removal of recent cause events.
double lambda_with_drop(const EffectiveCif& cif, int type, double t,
                        const std::vector<Event>& events, std::size_t n_before,
                        int drop_type, double drop_from) {
    double acc = cif.mu(type);
    for (std::size_t k = n_before; k-- > 0;) {
        const double age = t - events[k].t;
        if (age > cif.cutoff_age()) break;
        if (events[k].type == drop_type && events[k].t >= drop_from) continue;
        const ExpKernel& ker = cif.kernel(type, events[k].type);
        if (ker.a > 0.0) acc += ker.value(age);
    }
    return acc;
}

}  // namespace

AteValue true_ate_oracle(const GroundTruth& truth, const Taxonomy& taxonomy,
                         int cause, int outcome, int intervention_type, int v,
                         const OracleOptions& options) {
    if (options.mc_sequences <= 0)
        throw ArgumentError("true_ate_oracle needs mc_sequences >= 1");
    if (taxonomy.role(cause) != Role::Cause)
        throw ArgumentError("oracle pair: cause id lacks cause role");
    if (taxonomy.role(outcome) != Role::Outcome)
        throw ArgumentError("oracle pair: outcome id lacks outcome role");
    if (taxonomy.role(intervention_type) != Role::Intervention)
        throw ArgumentError("oracle pair: intervention id lacks intervention role");

    const auto& ivs = truth.interventions;
    std::vector<bool> queried(ivs.size(), false);
    for (std::size_t j = 0; j < ivs.size(); ++j)
        queried[j] = ivs[j].intervention_type == intervention_type &&
                     ivs[j].cause == cause && ivs[j].outcome == outcome;

    const int K = options.mc_sequences;
    std::vector<double> taus(static_cast<std::size_t>(K), 0.0);

#pragma omp parallel for schedule(dynamic) \
    num_threads(options.jobs > 0 ? options.jobs : 1)
    for (int k = 0; k < K; ++k) {
        const EventSequence seq = simulate_one(
            truth, taxonomy, options.horizon_T, "oracle",
            Rng::stream(options.seed, static_cast<std::uint64_t>(k)), options.sim);

        std::vector<IntervalSet> v_active(ivs.size()), c_active(ivs.size());
        for (std::size_t j = 0; j < ivs.size(); ++j) {
            v_active[j] =
                indicator_set(seq, taxonomy, {ivs[j].intervention_type}, ivs[j].window);
            c_active[j] = indicator_set(seq, taxonomy, {ivs[j].cause}, truth.cause_window);
        }

        EffectiveCif cif(truth);
        const double T = seq.horizon_T;
        const long cells = std::max(1L, std::lround(std::ceil(T / options.grid_dt)));
        std::size_t n_before = 0;
        double integral = 0.0;

        for (long c = 0; c < cells; ++c) {
            const double lo = options.grid_dt * static_cast<double>(c);
            const double hi = std::min(T, lo + options.grid_dt);
            if (!(hi > lo)) break;
            const double mid = 0.5 * (lo + hi);
            while (n_before < seq.events.size() && seq.events[n_before].t < mid)
                ++n_before;

            for (int forced_c : {1, 0}) {
                cif.clear_mods();
                for (std::size_t j = 0; j < ivs.size(); ++j) {
                    if (queried[j]) {
                        if (forced_c == 1 && v == 1) cif.apply(static_cast<int>(j), kForcedKey);
                    } else if (v_active[j].contains(mid) && c_active[j].contains(mid)) {
                        cif.apply(static_cast<int>(j), covering_start(v_active[j], mid));
                    }
                }
                const int drop_type = forced_c == 0 ? cause : -1;
                const double lam =
                    lambda_with_drop(cif, outcome, mid, seq.events, n_before,
                                     drop_type, mid - truth.cause_window);
                integral += (forced_c == 1 ? 1.0 : -1.0) * lam * (hi - lo);
            }
        }
        taus[static_cast<std::size_t>(k)] = integral / T;
    }

    AteValue out;
    for (double t : taus) out.tau += t;
    out.tau /= static_cast<double>(K);
    if (K > 1) {
        double ss = 0.0;
        for (double t : taus) ss += (t - out.tau) * (t - out.tau);
        out.se = std::sqrt(ss / static_cast<double>(K - 1) / static_cast<double>(K));
    }
    return out;
}

}  // namespace ctpp
