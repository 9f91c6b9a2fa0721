#include "ctpp/sim/generate.hpp"

#include <algorithm>

#include "ctpp/core/error.hpp"
#include "ctpp/core/log.hpp"

namespace ctpp {

Taxonomy make_taxonomy(int n_cause, int n_covariate, int n_outcome,
                       int n_interventions) {
    std::vector<Role> roles;
    roles.insert(roles.end(), static_cast<std::size_t>(n_cause), Role::Cause);
    roles.insert(roles.end(), static_cast<std::size_t>(n_covariate), Role::Covariate);
    roles.insert(roles.end(), static_cast<std::size_t>(n_outcome), Role::Outcome);
    roles.insert(roles.end(), static_cast<std::size_t>(n_interventions),
                 Role::Intervention);
    return Taxonomy(std::move(roles));
}

HawkesSpec generate_hawkes(const Taxonomy& taxonomy, const GenerationRanges& ranges,
                           Rng& rng) {
    const int n = taxonomy.size();
    HawkesSpec spec;
    spec.baselines.resize(static_cast<std::size_t>(n), 0.0);
    spec.kernels.assign(static_cast<std::size_t>(n),
                        std::vector<ExpKernel>(static_cast<std::size_t>(n)));

    for (int i = 0; i < n; ++i) {
        if (taxonomy.role(i) == Role::Intervention) continue;  // trigger-driven
        spec.baselines[static_cast<std::size_t>(i)] =
            rng.uniform(ranges.mu_min, ranges.mu_max);
    }
    for (int tgt = 0; tgt < n; ++tgt) {
        if (taxonomy.role(tgt) == Role::Intervention) continue;
        for (int src = 0; src < n; ++src) {
            if (taxonomy.role(src) == Role::Intervention) continue;
            if (!rng.bernoulli(ranges.edge_prob)) continue;
            spec.kernels[static_cast<std::size_t>(tgt)][static_cast<std::size_t>(src)] =
                ExpKernel{rng.uniform(ranges.a_min, ranges.a_max),
                          rng.uniform(ranges.b_min, ranges.b_max)};
        }
    }

    const double rho = spec.branching_radius();
    if (rho > ranges.max_branching) {
        const double scale = ranges.max_branching / rho;
        for (auto& row : spec.kernels)
            for (auto& k : row) k.a *= scale;
        log::info("hawkes_rescaled", "radius", rho, "scale", scale);
    }
    spec.validate();
    return spec;
}

std::vector<InterventionSpec> generate_interventions(const Taxonomy& taxonomy,
                                                     const HawkesSpec& hawkes,
                                                     const KindMix& kind_mix,
                                                     const GenerationRanges& ranges,
                                                     Rng& rng) {
    const int n = kind_mix.total();
    if (n == 0) return {};

    const auto causes = taxonomy.ids_with(Role::Cause);
    const auto outcomes = taxonomy.ids_with(Role::Outcome);
    const auto covariates = taxonomy.ids_with(Role::Covariate);
    const auto iv_types = taxonomy.ids_with(Role::Intervention);
    if (causes.empty() || outcomes.empty())
        throw ConfigError("intervention generation needs >= 1 cause and >= 1 outcome type");
    if (static_cast<int>(iv_types.size()) < n)
        throw ConfigError("taxonomy has " + std::to_string(iv_types.size()) +
                          " intervention types but " + std::to_string(n) +
                          " interventions requested");
    if (kind_mix.covariate > 0 && covariates.empty())
        throw ConfigError("covariate-kind interventions need >= 1 covariate type");

    // Unique cause-outcome targets while they last, reused with a warning after.
    std::vector<std::pair<int, int>> pairs;
    for (int c : causes)
        for (int o : outcomes) pairs.push_back({c, o});
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1],
                  pairs[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
    std::size_t next_pair = 0;
    auto draw_pair = [&] {
        if (next_pair >= pairs.size()) {
            log::warn("intervention_pairs_exhausted", "n", n);
            next_pair = 0;
        }
        return pairs[next_pair++];
    };

    std::vector<InterventionSpec> out;
    out.reserve(static_cast<std::size_t>(n));
    auto emit = [&](InterventionKind kind, int count) {
        for (int i = 0; i < count; ++i) {
            InterventionSpec iv;
            iv.kind = kind;
            iv.intervention_type = iv_types[out.size()];
            std::tie(iv.cause, iv.outcome) = draw_pair();
            iv.occurrence_prob = rng.uniform(ranges.p_min, ranges.p_max);
            iv.window = rng.uniform(ranges.wv_min, ranges.wv_max);
            switch (kind) {
                case InterventionKind::Baseline:
                    iv.modified_mu =
                        hawkes.baselines[static_cast<std::size_t>(iv.outcome)] *
                        rng.uniform(ranges.mu_factor_min, ranges.mu_factor_max);
                    break;
                case InterventionKind::Cause:
                case InterventionKind::Covariate: {
                    if (kind == InterventionKind::Covariate)
                        iv.covariate = covariates[static_cast<std::size_t>(
                            rng.uniform_int(0, static_cast<int>(covariates.size()) - 1))];
                    const ExpKernel& base = hawkes.kernel(iv.outcome, iv.kernel_source());
                    if (base.is_zero())
                        iv.modified_kernel =
                            ExpKernel{rng.uniform(ranges.new_kernel_a_min,
                                                  ranges.new_kernel_a_max),
                                      rng.uniform(ranges.b_min, ranges.b_max)};
                    else
                        iv.modified_kernel = ExpKernel{0.0, base.b};
                    break;
                }
            }
            iv.validate(taxonomy);
            out.push_back(iv);
        }
    };
    emit(InterventionKind::Baseline, kind_mix.baseline);
    emit(InterventionKind::Cause, kind_mix.cause);
    emit(InterventionKind::Covariate, kind_mix.covariate);
    return out;
}

}  // namespace ctpp
