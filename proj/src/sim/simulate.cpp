#include "ctpp/sim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ctpp/core/error.hpp"
#include "ctpp/core/log.hpp"
#include "ctpp/sim/cif.hpp"

namespace ctpp {

namespace {
constexpr double kNeverActive = -std::numeric_limits<double>::infinity();
}

EventSequence simulate_one(const GroundTruth& truth, const Taxonomy& taxonomy,
                           double horizon_T, const std::string& seq_id, Rng rng,
                           const SimOptions& opts, SimStats* stats) {
    if (!(horizon_T > 0.0)) throw ConfigError("horizon must be > 0");
    truth.validate(taxonomy);

    const int n_types = taxonomy.size();
    const auto& ivs = truth.interventions;
    const auto n_iv = ivs.size();

    EventSequence seq;
    seq.seq_id = seq_id;
    seq.horizon_T = horizon_T;

    EffectiveCif cif(truth);
    std::vector<double> last_time(static_cast<std::size_t>(n_types), kNeverActive);
    std::vector<double> v_end(n_iv, kNeverActive);    // current window end
    std::vector<double> v_start(n_iv, kNeverActive);  // activation order key
    std::vector<double> rates(static_cast<std::size_t>(n_types) + n_iv, 0.0);
    long n_events = 0;

    auto cause_active_after = [&](int type, double t0) {
        return last_time[static_cast<std::size_t>(type)] + truth.cause_window > t0;
    };

    double t = 0.0;
    while (t < horizon_T) {
        // Window state is constant on (t, seg_end]; expiries bound the segment.
        double seg_end = horizon_T;
        for (std::size_t j = 0; j < n_iv; ++j)
            if (v_end[j] > t) seg_end = std::min(seg_end, v_end[j]);
        for (const auto& iv : ivs) {
            const double ce = last_time[static_cast<std::size_t>(iv.cause)] +
                              truth.cause_window;
            if (ce > t) seg_end = std::min(seg_end, ce);
        }

        cif.clear_mods();
        for (std::size_t j = 0; j < n_iv; ++j)
            if (v_end[j] > t && cause_active_after(ivs[j].cause, t))
                cif.apply(static_cast<int>(j), v_start[j]);

        double trigger_total = 0.0;
        for (std::size_t j = 0; j < n_iv; ++j)
            if (!(v_end[j] > t)) trigger_total += ivs[j].occurrence_prob;

        // Exact bound on (t, seg_end]: the CIF only decays between events.
        const double bound =
            cif.total_intensity(t, seq.events.data(), seq.events.size()) +
            trigger_total;
        if (!(bound > 0.0)) {
            t = seg_end;
            continue;
        }

        const double dt = rng.exponential(bound);
        if (t + dt >= seg_end) {
            t = seg_end;
            continue;
        }
        t += dt;

        double total = 0.0;
        for (int e = 0; e < n_types; ++e) {
            rates[static_cast<std::size_t>(e)] =
                cif.intensity(e, t, seq.events.data(), seq.events.size());
            total += rates[static_cast<std::size_t>(e)];
        }
        for (std::size_t j = 0; j < n_iv; ++j) {
            const double r = (v_end[j] > t) ? 0.0 : ivs[j].occurrence_prob;
            rates[static_cast<std::size_t>(n_types) + j] = r;
            total += r;
        }

        const double x = rng.uniform01() * bound;
        if (x >= total) continue;  // rejected candidate

        int chosen = -1;
        double acc = 0.0;
        for (std::size_t i = 0; i < rates.size(); ++i) {
            acc += rates[i];
            if (x < acc) {
                chosen = static_cast<int>(i);
                break;
            }
        }
        if (chosen < 0) chosen = static_cast<int>(rates.size()) - 1;

        double t_rec = t;
        if (!seq.events.empty() && t_rec <= seq.events.back().t)
            t_rec = std::nextafter(seq.events.back().t,
                                   std::numeric_limits<double>::infinity());
        if (t_rec >= horizon_T) break;

        if (++n_events > opts.max_events)
            throw SimulationError("sequence " + seq_id + " exceeded max_events=" +
                                  std::to_string(opts.max_events) +
                                  " (runaway intensity)");

        int rec_type;
        if (chosen < n_types) {
            rec_type = chosen;
        } else {
            const auto j = static_cast<std::size_t>(chosen - n_types);
            rec_type = ivs[j].intervention_type;
            v_end[j] = t_rec + ivs[j].window;
            v_start[j] = t_rec;
        }
        seq.events.push_back({rec_type, t_rec});
        last_time[static_cast<std::size_t>(rec_type)] = t_rec;
        t = t_rec;
    }

    if (stats) stats->override_collisions += cif.collisions();
    return seq;
}

namespace {

std::string dataset_seq_id(std::uint64_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "seq-%06llu",
                  static_cast<unsigned long long>(index));
    return buf;
}

}  // namespace

std::vector<EventSequence> simulate_dataset_serial(
    const GroundTruth& truth, const Taxonomy& taxonomy, int n_sequences,
    double horizon_T, std::uint64_t seq_seed_offset, const SimOptions& opts) {
    std::vector<EventSequence> out(static_cast<std::size_t>(n_sequences));
    SimStats stats;
    for (int i = 0; i < n_sequences; ++i) {
        const std::uint64_t index = seq_seed_offset + static_cast<std::uint64_t>(i);
        out[static_cast<std::size_t>(i)] =
            simulate_one(truth, taxonomy, horizon_T, dataset_seq_id(index),
                         Rng::stream(truth.master_seed, index), opts, &stats);
    }
    if (stats.override_collisions > 0)
        log::warn("override_collisions", "count", stats.override_collisions);
    return out;
}

std::vector<EventSequence> simulate_dataset(const GroundTruth& truth,
                                            const Taxonomy& taxonomy,
                                            int n_sequences, double horizon_T,
                                            std::uint64_t seq_seed_offset,
                                            const SimOptions& opts) {
    std::vector<EventSequence> out(static_cast<std::size_t>(n_sequences));
    long collisions = 0;
    std::string failure;

#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs > 0 ? opts.jobs : 1) \
    reduction(+ : collisions)
    for (int i = 0; i < n_sequences; ++i) {
        const std::uint64_t index = seq_seed_offset + static_cast<std::uint64_t>(i);
        SimStats stats;
        try {
            out[static_cast<std::size_t>(i)] =
                simulate_one(truth, taxonomy, horizon_T, dataset_seq_id(index),
                             Rng::stream(truth.master_seed, index), opts, &stats);
        } catch (const Error& ex) {
#pragma omp critical
            if (failure.empty()) failure = ex.what();
        }
        collisions += stats.override_collisions;
    }

    if (!failure.empty()) throw SimulationError(failure);
    if (collisions > 0) log::warn("override_collisions", "count", collisions);
    return out;
}

double tune_horizon_for_length(const GroundTruth& truth, const Taxonomy& taxonomy,
                               double target_length, const SimOptions& opts) {
    if (!(target_length > 0.0)) throw ArgumentError("target length must be > 0");
    auto mean_length = [&](double T) {
        const int probes = 8;
        double total = 0.0;
        for (int i = 0; i < probes; ++i)
            total += static_cast<double>(
                simulate_one(truth, taxonomy, T, "probe",
                             Rng::stream(truth.master_seed ^ 0xabcdefULL,
                                         static_cast<std::uint64_t>(i)),
                             opts)
                    .events.size());
        return total / probes;
    };

    double lo = 1.0, hi = 1.0;
    while (mean_length(hi) < target_length && hi < 1e7) hi *= 2.0;
    while (mean_length(lo) > target_length && lo > 1e-7) lo *= 0.5;
    for (int iter = 0; iter < 24; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mean_length(mid) < target_length)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace ctpp
