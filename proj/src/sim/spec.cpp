#include "ctpp/sim/spec.hpp"

#include <algorithm>

#include <json.hpp>

#include "ctpp/core/error.hpp"
#include "ctpp/core/io.hpp"

namespace ctpp {

using nlohmann::json;

double HawkesSpec::branching_radius() const {
    const int n = n_types();
    if (n == 0) return 0.0;
    std::vector<double> v(static_cast<std::size_t>(n), 1.0), w(v.size());
    double radius = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                acc += std::abs(kernel(i, j).mass()) * v[static_cast<std::size_t>(j)];
            w[static_cast<std::size_t>(i)] = acc;
            norm = std::max(norm, acc);
        }
        if (norm == 0.0) return 0.0;
        for (auto& x : w) x /= norm;
        v.swap(w);
        radius = norm;
    }
    return radius;
}

void HawkesSpec::validate() const {
    const auto n = baselines.size();
    if (kernels.size() != n)
        throw ConfigError("kernel matrix must be square in the type count");
    for (const auto& row : kernels)
        if (row.size() != n)
            throw ConfigError("kernel matrix must be square in the type count");
    for (double mu : baselines)
        if (!(mu >= 0.0)) throw ConfigError("baseline rates must be >= 0");
    for (const auto& row : kernels)
        for (const auto& k : row) {
            if (!(k.a >= 0.0)) throw ConfigError("kernel amplitude must be >= 0");
            if (!(k.b > 0.0)) throw ConfigError("kernel decay must be > 0");
        }
    const double rho = branching_radius();
    if (rho >= 1.0)
        throw ConfigError("non-stationary Hawkes spec: branching radius " +
                          std::to_string(rho) + " >= 1");
}

const char* kind_name(InterventionKind k) {
    switch (k) {
        case InterventionKind::Baseline: return "baseline";
        case InterventionKind::Cause: return "cause";
        case InterventionKind::Covariate: return "covariate";
    }
    return "?";
}

InterventionKind kind_from_name(const std::string& name) {
    if (name == "baseline") return InterventionKind::Baseline;
    if (name == "cause") return InterventionKind::Cause;
    if (name == "covariate") return InterventionKind::Covariate;
    throw ConfigError("unknown intervention kind '" + name + "'");
}

void InterventionSpec::validate(const Taxonomy& taxonomy) const {
    if (taxonomy.role(intervention_type) != Role::Intervention)
        throw ConfigError("intervention_type " + std::to_string(intervention_type) +
                          " does not have role intervention");
    if (taxonomy.role(cause) != Role::Cause)
        throw ConfigError("cause id " + std::to_string(cause) +
                          " does not have role cause");
    if (taxonomy.role(outcome) != Role::Outcome)
        throw ConfigError("outcome id " + std::to_string(outcome) +
                          " does not have role outcome");
    if (kind == InterventionKind::Covariate &&
        taxonomy.role(covariate) != Role::Covariate)
        throw ConfigError("covariate id " + std::to_string(covariate) +
                          " does not have role covariate");
    if (!(occurrence_prob > 0.0 && occurrence_prob < 1.0))
        throw ConfigError("occurrence probability must lie in (0, 1)");
    if (!(window > 0.0)) throw ConfigError("intervention window must be > 0");
    if (kind == InterventionKind::Baseline && !(modified_mu >= 0.0))
        throw ConfigError("modified baseline must be >= 0");
    if (kind != InterventionKind::Baseline &&
        (!(modified_kernel.a >= 0.0) || !(modified_kernel.b > 0.0)))
        throw ConfigError("modified kernel must have a >= 0, b > 0");
}

void GroundTruth::validate(const Taxonomy& taxonomy) const {
    hawkes.validate();
    if (hawkes.n_types() != taxonomy.size())
        throw ConfigError("Hawkes spec type count differs from taxonomy size");
    if (!(cause_window > 0.0)) throw ConfigError("cause window must be > 0");
    for (const auto& iv : interventions) iv.validate(taxonomy);
}

namespace {

json kernel_to_json(const ExpKernel& k) { return json{{"a", k.a}, {"b", k.b}}; }
ExpKernel kernel_from_json(const json& j) {
    return ExpKernel{j.at("a").get<double>(), j.at("b").get<double>()};
}

}  // namespace

void write_truth(const std::string& path, const GroundTruth& truth) {
    json kernels = json::array();
    for (const auto& row : truth.hawkes.kernels) {
        json jrow = json::array();
        for (const auto& k : row) jrow.push_back(kernel_to_json(k));
        kernels.push_back(jrow);
    }
    json interventions = json::array();
    for (const auto& iv : truth.interventions) {
        json obj{{"intervention_type", iv.intervention_type},
                 {"kind", kind_name(iv.kind)},
                 {"cause", iv.cause},
                 {"outcome", iv.outcome},
                 {"occurrence_prob", iv.occurrence_prob},
                 {"window", iv.window}};
        if (iv.kind == InterventionKind::Baseline)
            obj["modified_mu"] = iv.modified_mu;
        else
            obj["modified_kernel"] = kernel_to_json(iv.modified_kernel);
        if (iv.kind == InterventionKind::Covariate) obj["covariate"] = iv.covariate;
        interventions.push_back(obj);
    }
    json ate = nullptr;
    if (truth.true_ate) {
        ate = json::array();
        for (const auto& p : *truth.true_ate)
            ate.push_back({{"cause", p.cause},
                           {"outcome", p.outcome},
                           {"intervention", p.intervention},
                           {"tau0", p.tau0},
                           {"tau1", p.tau1},
                           {"se0", p.se0},
                           {"se1", p.se1}});
    }
    json obj{{"hawkes", {{"baselines", truth.hawkes.baselines}, {"kernels", kernels}}},
             {"interventions", interventions},
             {"cause_window", truth.cause_window},
             {"master_seed", truth.master_seed},
             {"trigger_law", truth.trigger_law},
             {"true_ate", ate}};
    write_text_file(path, obj.dump(2) + "\n");
}

GroundTruth read_truth(const std::string& path) {
    json obj;
    try {
        obj = json::parse(read_text_file(path));
    } catch (const json::exception& ex) {
        throw IoError(path + ": " + ex.what());
    }
    GroundTruth truth;
    try {
        const json& hw = obj.at("hawkes");
        truth.hawkes.baselines = hw.at("baselines").get<std::vector<double>>();
        for (const auto& jrow : hw.at("kernels")) {
            std::vector<ExpKernel> row;
            for (const auto& jk : jrow) row.push_back(kernel_from_json(jk));
            truth.hawkes.kernels.push_back(std::move(row));
        }
        for (const auto& jiv : obj.at("interventions")) {
            InterventionSpec iv;
            iv.intervention_type = jiv.at("intervention_type").get<int>();
            iv.kind = kind_from_name(jiv.at("kind").get<std::string>());
            iv.cause = jiv.at("cause").get<int>();
            iv.outcome = jiv.at("outcome").get<int>();
            iv.occurrence_prob = jiv.at("occurrence_prob").get<double>();
            iv.window = jiv.at("window").get<double>();
            if (iv.kind == InterventionKind::Baseline)
                iv.modified_mu = jiv.at("modified_mu").get<double>();
            else
                iv.modified_kernel = kernel_from_json(jiv.at("modified_kernel"));
            if (iv.kind == InterventionKind::Covariate)
                iv.covariate = jiv.at("covariate").get<int>();
            truth.interventions.push_back(iv);
        }
        truth.cause_window = obj.at("cause_window").get<double>();
        truth.master_seed = obj.at("master_seed").get<std::uint64_t>();
        truth.trigger_law = obj.at("trigger_law").get<std::string>();
        if (!obj.at("true_ate").is_null()) {
            std::vector<PairAte> ates;
            for (const auto& jp : obj.at("true_ate"))
                ates.push_back({jp.at("cause").get<int>(), jp.at("outcome").get<int>(),
                                jp.at("intervention").get<int>(),
                                jp.at("tau0").get<double>(), jp.at("tau1").get<double>(),
                                jp.at("se0").get<double>(), jp.at("se1").get<double>()});
            truth.true_ate = std::move(ates);
        }
    } catch (const json::exception& ex) {
        throw IoError(path + ": malformed truth file: " + ex.what());
    }
    return truth;
}

}  // namespace ctpp
