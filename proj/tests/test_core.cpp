#include <stdexcept>

#include "doctest.h"
#include "ordloc/core.hpp"
#include "test_util.hpp"

using namespace ordloc;
using namespace ordloc::testutil;

TEST_CASE("walkthrough instance evaluates exactly") {
    Instance inst = walkthrough();
    Placement y{Rat(1, 5), Rat(4, 5)};

    CHECK(agent_cost(inst, 0, y) == Rat(1, 5));
    CHECK(agent_cost(inst, 1, y) == Rat(2, 5));
    CHECK(agent_cost(inst, 2, y) == Rat(3, 5));
    CHECK(objective_value(inst, y, Objective::MaxCost) == Rat(3, 5));
    CHECK(objective_value(inst, y, Objective::TotalCost) == Rat(6, 5));

    // the rightmost agent is served by its second choice: 3*(1/5) < 4/5
    CHECK(serving_facility_cost(inst, 0, y) == 0);
    CHECK(serving_facility_cost(inst, 1, y) == 1);
    CHECK(serving_facility_cost(inst, 2, y) == 1);

    CHECK(agent_utility(inst, 0, y) == Rat(4, 5));
    CHECK(agent_utility(inst, 1, y) == Rat(3, 5));
    CHECK(agent_utility(inst, 2, y) == Rat(4, 15));  // max(1/5, (4/5)/3)
    CHECK(objective_value(inst, y, Objective::MinUtility) == Rat(4, 15));
    CHECK(objective_value(inst, y, Objective::TotalUtility) == Rat(5, 3));
}

TEST_CASE("additive model adds the rank coefficient instead of scaling") {
    Instance inst = Instance::make(ModelKind::Additive, {Rat(0), Rat(1, 4)},
                                   {Agent{Rat(0), F1}});
    Placement y{Rat(1, 2), Rat(0)};
    CHECK(agent_cost(inst, 0, y) == Rat(1, 4));     // min(1/2 + 0, 0 + 1/4)
    CHECK(agent_utility(inst, 0, y) == Rat(3, 4));  // max(1 - 1/2, 1 - 1/4)
    CHECK(serving_facility_cost(inst, 0, y) == 1);
}

TEST_CASE("serving facility breaks exact ties toward the lower index") {
    Instance inst = mult2(Rat(1), {Rat(1, 2)}, {F2});
    Placement y{Rat(1, 4), Rat(3, 4)};  // both facilities cost 1/4
    CHECK(serving_facility_cost(inst, 0, y) == 0);
    CHECK(serving_facility_utility(inst, 0, y) == 0);
}

TEST_CASE("performance_ratio handles zero denominators") {
    Objective cost = Objective::TotalCost;
    Objective util = Objective::TotalUtility;
    CHECK(performance_ratio(Rat(0), Rat(0), cost) == RatioValue::finite(Rat(1)));
    CHECK(performance_ratio(Rat(1), Rat(0), cost) == RatioValue::infinity());
    CHECK(performance_ratio(Rat(3), Rat(2), cost) == RatioValue::finite(Rat(3, 2)));
    // utility ratios flip: optimum over mechanism
    CHECK(performance_ratio(Rat(2), Rat(3), util) == RatioValue::finite(Rat(3, 2)));
    CHECK(performance_ratio(Rat(0), Rat(1), util) == RatioValue::infinity());
    CHECK(performance_ratio(Rat(0), Rat(0), util) == RatioValue::finite(Rat(1)));
    CHECK_THROWS_AS(performance_ratio(Rat(-1), Rat(1), cost), std::invalid_argument);
}

TEST_CASE("Instance::make validates every invariant") {
    CHECK_THROWS_AS(Instance::make(ModelKind::Multiplicative, {}, {Agent{Rat(0), {}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Instance::make(ModelKind::Multiplicative, {Rat(1), Rat(3)}, {}),
                    std::invalid_argument);
    // multiplicative needs alpha_1 = 1, additive alpha_1 = 0 and alpha_m <= 1
    CHECK_THROWS_AS(mult2(Rat(1, 2), {Rat(0)}, {F1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance::make(ModelKind::Multiplicative, {Rat(2), Rat(3)},
                                   {Agent{Rat(0), F1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Instance::make(ModelKind::Additive, {Rat(1, 4), Rat(1, 2)},
                                   {Agent{Rat(0), F1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Instance::make(ModelKind::Additive, {Rat(0), Rat(2)},
                                   {Agent{Rat(0), F1}}),
                    std::invalid_argument);
    // nondecreasing alpha
    CHECK_THROWS_AS(Instance::make(ModelKind::Multiplicative, {Rat(1), Rat(3), Rat(2)},
                                   {Agent{Rat(0), {0, 1, 2}}}),
                    std::invalid_argument);
    // agent invariants
    CHECK_THROWS_AS(mult2(Rat(3), {Rat(2)}, {F1}), std::invalid_argument);
    CHECK_THROWS_AS(mult2(Rat(3), {Rat(-1, 2)}, {F1}), std::invalid_argument);
    CHECK_THROWS_AS(mult2(Rat(3), {Rat(0)}, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(mult2(Rat(3), {Rat(0)}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(mult2(Rat(3), {Rat(0)}, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("objective and model names round-trip") {
    for (Objective o : {Objective::TotalCost, Objective::MaxCost, Objective::TotalUtility,
                        Objective::MinUtility})
        CHECK(parse_objective(objective_name(o)) == o);
    CHECK(parse_model("additive") == ModelKind::Additive);
    CHECK_THROWS_AS(parse_objective("cost"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("linear"), std::invalid_argument);
}

TEST_CASE("placement validation rejects wrong arity and out-of-range coordinates") {
    Instance inst = walkthrough();
    CHECK_THROWS_AS(objective_value(inst, {Rat(1, 2)}, Objective::TotalCost),
                    std::invalid_argument);
    CHECK_THROWS_AS(objective_value(inst, {Rat(1, 2), Rat(3, 2)}, Objective::TotalCost),
                    std::invalid_argument);
}
