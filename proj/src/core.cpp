#include "ordloc/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordloc {

namespace {

void check_placement(const Instance& inst, const Placement& y) {
    if (y.size() != inst.facility_count())
        throw std::invalid_argument("placement has " + std::to_string(y.size()) +
                                    " coordinates, instance has " +
                                    std::to_string(inst.facility_count()) + " facilities");
    for (const Rat& c : y)
        if (c < 0 || c > 1) throw std::invalid_argument("placement coordinate outside [0,1]");
}

void check_agent_index(const Instance& inst, std::size_t i) {
    if (i >= inst.agent_count()) throw std::invalid_argument("agent index out of range");
}

}  // namespace

Instance Instance::make(ModelKind model, std::vector<Rat> alpha, std::vector<Agent> agents) {
    if (alpha.empty()) throw std::invalid_argument("need at least one facility");
    if (agents.empty()) throw std::invalid_argument("need at least one agent");
    const std::size_t m = alpha.size();

    if (model == ModelKind::Multiplicative) {
        if (alpha.front() != 1) throw std::invalid_argument("multiplicative alpha_1 must be 1");
    } else {
        if (alpha.front() != 0) throw std::invalid_argument("additive alpha_1 must be 0");
        if (alpha.back() > 1) throw std::invalid_argument("additive alpha_m must be <= 1");
    }
    for (std::size_t k = 1; k < m; ++k)
        if (alpha[k] < alpha[k - 1]) throw std::invalid_argument("alpha must be nondecreasing");

    std::vector<char> seen(m);
    for (const Agent& a : agents) {
        if (a.x < 0 || a.x > 1) throw std::invalid_argument("agent location outside [0,1]");
        if (a.pref.size() != m)
            throw std::invalid_argument("preference ranking must cover all facilities");
        std::fill(seen.begin(), seen.end(), 0);
        for (int f : a.pref) {
            if (f < 0 || static_cast<std::size_t>(f) >= m || seen[f])
                throw std::invalid_argument("preference ranking is not a permutation");
            seen[f] = 1;
        }
    }

    Instance inst;
    inst.model = model;
    inst.alpha = std::move(alpha);
    inst.agents = std::move(agents);
    return inst;
}

std::vector<Rat> Instance::locations() const {
    std::vector<Rat> xs;
    xs.reserve(agents.size());
    for (const Agent& a : agents) xs.push_back(a.x);
    return xs;
}

Rat agent_cost(const Instance& inst, std::size_t i, const Placement& y) {
    check_agent_index(inst, i);
    check_placement(inst, y);
    const Agent& a = inst.agents[i];
    Rat best;
    for (std::size_t k = 0; k < a.pref.size(); ++k) {
        Rat d = rat_abs(a.x - y[a.pref[k]]);
        Rat c = inst.model == ModelKind::Multiplicative ? Rat(inst.alpha[k] * d)
                                                        : Rat(d + inst.alpha[k]);
        if (k == 0 || c < best) best = c;
    }
    return best;
}

Rat agent_utility(const Instance& inst, std::size_t i, const Placement& y) {
    check_agent_index(inst, i);
    check_placement(inst, y);
    const Agent& a = inst.agents[i];
    Rat best;
    for (std::size_t k = 0; k < a.pref.size(); ++k) {
        Rat d = rat_abs(a.x - y[a.pref[k]]);
        Rat u = inst.model == ModelKind::Multiplicative ? Rat((1 - d) / inst.alpha[k])
                                                        : Rat(1 - d - inst.alpha[k]);
        if (k == 0 || u > best) best = u;
    }
    return best;
}

std::size_t serving_facility_cost(const Instance& inst, std::size_t i, const Placement& y) {
    Rat target = agent_cost(inst, i, y);
    const Agent& a = inst.agents[i];
    std::size_t best = inst.facility_count();
    for (std::size_t k = 0; k < a.pref.size(); ++k) {
        Rat d = rat_abs(a.x - y[a.pref[k]]);
        Rat c = inst.model == ModelKind::Multiplicative ? Rat(inst.alpha[k] * d)
                                                        : Rat(d + inst.alpha[k]);
        if (c == target) best = std::min(best, static_cast<std::size_t>(a.pref[k]));
    }
    return best;
}

std::size_t serving_facility_utility(const Instance& inst, std::size_t i, const Placement& y) {
    Rat target = agent_utility(inst, i, y);
    const Agent& a = inst.agents[i];
    std::size_t best = inst.facility_count();
    for (std::size_t k = 0; k < a.pref.size(); ++k) {
        Rat d = rat_abs(a.x - y[a.pref[k]]);
        Rat u = inst.model == ModelKind::Multiplicative ? Rat((1 - d) / inst.alpha[k])
                                                        : Rat(1 - d - inst.alpha[k]);
        if (u == target) best = std::min(best, static_cast<std::size_t>(a.pref[k]));
    }
    return best;
}

Rat objective_value(const Instance& inst, const Placement& y, Objective obj) {
    check_placement(inst, y);
    const std::size_t n = inst.agent_count();
    Rat acc;
    switch (obj) {
        case Objective::TotalCost:
            acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc += agent_cost(inst, i, y);
            return acc;
        case Objective::MaxCost:
            acc = agent_cost(inst, 0, y);
            for (std::size_t i = 1; i < n; ++i) acc = std::max(acc, agent_cost(inst, i, y));
            return acc;
        case Objective::TotalUtility:
            acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc += agent_utility(inst, i, y);
            return acc;
        case Objective::MinUtility:
            acc = agent_utility(inst, 0, y);
            for (std::size_t i = 1; i < n; ++i) acc = std::min(acc, agent_utility(inst, i, y));
            return acc;
    }
    throw std::invalid_argument("unknown objective");
}

RatioValue performance_ratio(const Rat& mechanism_value, const Rat& optimal_value, Objective obj) {
    if (mechanism_value < 0 || optimal_value < 0)
        throw std::invalid_argument("ratio inputs must be nonnegative");
    const Rat& num = is_cost_objective(obj) ? mechanism_value : optimal_value;
    const Rat& den = is_cost_objective(obj) ? optimal_value : mechanism_value;
    if (den == 0) {
        if (num == 0) return RatioValue::finite(1);
        return RatioValue::infinity();
    }
    return RatioValue::finite(num / den);
}

const char* objective_name(Objective obj) {
    switch (obj) {
        case Objective::TotalCost: return "total-cost";
        case Objective::MaxCost: return "max-cost";
        case Objective::TotalUtility: return "total-utility";
        case Objective::MinUtility: return "min-utility";
    }
    return "?";
}

Objective parse_objective(std::string_view name) {
    if (name == "total-cost") return Objective::TotalCost;
    if (name == "max-cost") return Objective::MaxCost;
    if (name == "total-utility") return Objective::TotalUtility;
    if (name == "min-utility") return Objective::MinUtility;
    throw std::invalid_argument("unknown objective: '" + std::string(name) + "'");
}

const char* model_name(ModelKind model) {
    return model == ModelKind::Multiplicative ? "multiplicative" : "additive";
}

ModelKind parse_model(std::string_view name) {
    if (name == "multiplicative") return ModelKind::Multiplicative;
    if (name == "additive") return ModelKind::Additive;
    throw std::invalid_argument("unknown model: '" + std::string(name) + "'");
}

}  // namespace ordloc
