#include <stdexcept>

#include "doctest.h"
#include "ordloc/mechanisms.hpp"
#include "test_util.hpp"

using namespace ordloc;
using namespace ordloc::testutil;

TEST_CASE("boundary_stats computes the central order statistics") {
    BoundaryStats s = boundary_stats({Rat(0), Rat(2, 5), Rat(1)});
    CHECK(s.lt == Rat(0));
    CHECK(s.rt == Rat(1));
    CHECK(s.cen == Rat(1, 2));
    CHECK(s.lb == Rat(2, 5));
    CHECK(s.rb == Rat(1));
    CHECK(s.dist == Rat(2, 5));  // max(2/5 - 0, 1 - 1)
    CHECK_THROWS_AS(boundary_stats({}), std::invalid_argument);

    // an agent exactly at the center serves as both lb and rb
    BoundaryStats c = boundary_stats({Rat(0), Rat(3, 8), Rat(3, 4)});
    CHECK(c.cen == Rat(3, 8));
    CHECK(c.lb == Rat(3, 8));
    CHECK(c.rb == Rat(3, 8));
}

TEST_CASE("midpoints and extremes on the walkthrough instance") {
    Instance inst = walkthrough();
    CHECK(run_mechanism(MechanismId::Midpoints, inst) == Placement{Rat(1, 5), Rat(1)});
    CHECK(run_mechanism(MechanismId::Extremes, inst) == Placement{Rat(0), Rat(1)});
}

TEST_CASE("preferred midpoints takes each top-choice group's midpoint") {
    Instance inst = walkthrough();  // group 1: {0, 1}, group 2: {2/5}
    CHECK(run_mechanism(MechanismId::PreferredMidpoints, inst) ==
          Placement{Rat(1, 2), Rat(2, 5)});

    // an empty group falls back to 1/2
    Instance one_sided = mult2(Rat(3), {Rat(0), Rat(1, 5)}, {F1, F1});
    CHECK(run_mechanism(MechanismId::PreferredMidpoints, one_sided) ==
          Placement{Rat(1, 10), Rat(1, 2)});
    CHECK(run_mechanism(MechanismId::MedianPerFacility, one_sided) ==
          Placement{Rat(0), Rat(1, 2)});
}

TEST_CASE("fixed center handles any facility count") {
    Instance inst = Instance::make(ModelKind::Multiplicative, {Rat(1), Rat(2), Rat(3)},
                                   {Agent{Rat(1, 4), {2, 0, 1}}});
    CHECK(run_mechanism(MechanismId::FixedCenter, inst) ==
          Placement{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    // every other mechanism requires exactly two facilities
    CHECK_THROWS_AS(run_mechanism(MechanismId::Midpoints, inst), std::invalid_argument);
    CHECK_THROWS_AS(run_mechanism(MechanismId::OptimalSplitTotalCost, inst),
                    std::invalid_argument);
}

TEST_CASE("optimal split breaks value ties toward the leftmost split") {
    Instance inst = mult2(Rat(1), {Rat(0), Rat(1, 2), Rat(1, 2), Rat(1)},
                          {F1, F1, F1, F1});
    // splits after positions 1 and 3 both cost 1/2; the first wins
    Placement y = run_mechanism(MechanismId::OptimalSplitTotalCost, inst);
    CHECK(y == Placement{Rat(0), Rat(1, 2)});
    CHECK(objective_value(inst, y, Objective::TotalCost) == Rat(1, 2));
}

TEST_CASE("optimal split uses lower medians of each part") {
    Instance inst = mult2(Rat(1), {Rat(0), Rat(1, 10), Rat(9, 10), Rat(1)},
                          {F1, F1, F1, F1});
    CHECK(run_mechanism(MechanismId::OptimalSplitTotalCost, inst) ==
          Placement{Rat(0), Rat(9, 10)});
}

TEST_CASE("median per facility pays for a lonely minority") {
    Instance inst = mult2(Rat(3), {Rat(0), Rat(0), Rat(0), Rat(1)}, {F1, F2, F2, F2});
    Placement y = run_mechanism(MechanismId::MedianPerFacility, inst);
    CHECK(y == Placement{Rat(0), Rat(0)});
    CHECK(objective_value(inst, y, Objective::TotalCost) == Rat(1));
}

TEST_CASE("single-agent profiles collapse to the agent's location") {
    Instance inst = mult2(Rat(3), {Rat(1, 3)}, {F1});
    CHECK(run_mechanism(MechanismId::Midpoints, inst) == Placement{Rat(1, 3), Rat(1, 3)});
    CHECK(run_mechanism(MechanismId::Extremes, inst) == Placement{Rat(1, 3), Rat(1, 3)});
    CHECK(run_mechanism(MechanismId::OptimalSplitTotalCost, inst) ==
          Placement{Rat(1, 3), Rat(1, 3)});
}

TEST_CASE("lower_median picks the left of an even-length middle pair") {
    CHECK(lower_median({Rat(1, 2)}) == Rat(1, 2));
    CHECK(lower_median({Rat(2), Rat(1)}) == Rat(1));
    CHECK(lower_median({Rat(3), Rat(1), Rat(2)}) == Rat(2));
    CHECK(lower_median({Rat(4), Rat(1), Rat(3), Rat(2)}) == Rat(2));
    CHECK_THROWS_AS(lower_median({}), std::invalid_argument);
}

TEST_CASE("mechanism names round-trip") {
    CHECK(all_mechanisms().size() == 6);
    for (MechanismId mech : all_mechanisms())
        CHECK(parse_mechanism(mechanism_name(mech)) == mech);
    CHECK_THROWS_AS(parse_mechanism("midpoint"), std::invalid_argument);
}
