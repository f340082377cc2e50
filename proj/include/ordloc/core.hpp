#ifndef ORDLOC_CORE_HPP
#define ORDLOC_CORE_HPP

#include <cstddef>
#include <vector>

#include "ordloc/rational.hpp"

namespace ordloc {

// How the ordinal preference ranks scale an agent's view of the facilities.
// Multiplicative: serving the k-th ranked facility costs alpha_k * distance
// (alpha_1 = 1 <= alpha_2 <= ...). Additive: it costs distance + alpha_k
// (0 = alpha_1 <= ... <= alpha_m <= 1).
enum class ModelKind { Multiplicative, Additive };

enum class Objective { TotalCost, MaxCost, TotalUtility, MinUtility };

inline bool is_cost_objective(Objective o) {
    return o == Objective::TotalCost || o == Objective::MaxCost;
}

struct Agent {
    Rat x;                  // location in [0,1]
    std::vector<int> pref;  // pref[k] = 0-based facility index ranked k-th
};

// A facility-location game instance. Construct through make(), which
// validates every invariant and throws std::invalid_argument otherwise.
struct Instance {
    ModelKind model = ModelKind::Multiplicative;
    std::vector<Rat> alpha;    // one entry per rank, size m
    std::vector<Agent> agents; // stored in input order; nobody sorts here

    static Instance make(ModelKind model, std::vector<Rat> alpha, std::vector<Agent> agents);

    std::size_t facility_count() const { return alpha.size(); }
    std::size_t agent_count() const { return agents.size(); }
    std::vector<Rat> locations() const;
};

// Facility coordinates, one per facility, each in [0,1]. Facilities are
// interchangeable in space; only preferences distinguish them.
using Placement = std::vector<Rat>;

// Cost of agent i under placement y: the best rank-scaled distance over the
// agent's ranking.
Rat agent_cost(const Instance& inst, std::size_t i, const Placement& y);

// Utility of agent i: multiplicative (1 - d)/alpha_k maximized over ranks,
// additive 1 - d - alpha_k.
Rat agent_utility(const Instance& inst, std::size_t i, const Placement& y);

// 0-based index of the facility attaining the agent's cost or utility;
// the lowest facility index wins ties.
std::size_t serving_facility_cost(const Instance& inst, std::size_t i, const Placement& y);
std::size_t serving_facility_utility(const Instance& inst, std::size_t i, const Placement& y);

Rat objective_value(const Instance& inst, const Placement& y, Objective obj);

// mechanism/optimum for costs, optimum/mechanism for utilities.
// Zero denominator with a positive numerator yields the +infinity marker;
// 0/0 is defined as 1 (both sides agree the instance is free/worthless).
RatioValue performance_ratio(const Rat& mechanism_value, const Rat& optimal_value, Objective obj);

const char* objective_name(Objective obj);
Objective parse_objective(std::string_view name);  // throws std::invalid_argument

const char* model_name(ModelKind model);
ModelKind parse_model(std::string_view name);

}  // namespace ordloc

#endif
