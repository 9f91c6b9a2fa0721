#pragma once

#include <string>
#include <vector>

#include "ctpp/core/error.hpp"

namespace ctpp {

enum class Role { Cause, Outcome, Intervention, Covariate };

const char* role_name(Role r);
Role role_from_name(const std::string& name);

// Dense event-type table: type ids are 0..size()-1, each with exactly one role.
class Taxonomy {
public:
    Taxonomy() = default;
    explicit Taxonomy(std::vector<Role> roles) : roles_(std::move(roles)) {}

    int size() const { return static_cast<int>(roles_.size()); }

    bool has(int id) const { return id >= 0 && id < size(); }

    Role role(int id) const {
        require(id);
        return roles_[static_cast<std::size_t>(id)];
    }

    void require(int id) const {
        if (!has(id))
            throw TaxonomyError("unknown event type id " + std::to_string(id));
    }

    std::vector<int> ids_with(Role r) const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (roles_[static_cast<std::size_t>(i)] == r) out.push_back(i);
        return out;
    }

    const std::vector<Role>& roles() const { return roles_; }

    bool operator==(const Taxonomy&) const = default;

private:
    std::vector<Role> roles_;
};

struct Event {
    int type = 0;
    double t = 0.0;

    bool operator==(const Event&) const = default;
};

// Ordered event record over a fixed horizon. Timestamps are strictly
// increasing and live in [0, horizon_T); simultaneous events are forbidden.
struct EventSequence {
    std::string seq_id;
    double horizon_T = 0.0;
    std::vector<Event> events;

    void validate(const Taxonomy* taxonomy = nullptr) const;

    int count_of_type(int type_id) const {
        int n = 0;
        for (const auto& e : events) n += (e.type == type_id);
        return n;
    }

    bool operator==(const EventSequence&) const = default;
};

struct WindowConfig {
    double cause_window = 0.0;
    double intervention_window = 0.0;

    void validate() const {
        if (cause_window <= 0.0 || intervention_window <= 0.0)
            throw ConfigError("window lengths must be strictly positive");
    }
};

}  // namespace ctpp
