#include <stdexcept>

#include "doctest.h"
#include "ordloc/audit.hpp"
#include "ordloc/generators.hpp"
#include "test_util.hpp"

using namespace ordloc;
using namespace ordloc::testutil;

namespace {

// Re-validate a violation from scratch: patch the reports into a copy, rerun
// the mechanism, and confirm every member strictly improves its true welfare.
void revalidate(MechanismId mech, const Instance& inst, const AuditVerdict& v,
                WelfareMode mode) {
    REQUIRE(v.violation_found);
    REQUIRE_FALSE(v.members.empty());
    Instance patched = inst;
    for (const MemberReport& mr : v.members) {
        CHECK(mr.true_x == inst.agents[mr.agent].x);
        CHECK(mr.true_pref == inst.agents[mr.agent].pref);
        patched.agents[mr.agent].x = mr.reported_x;
        patched.agents[mr.agent].pref = mr.reported_pref;
    }
    CHECK(run_mechanism(mech, patched) == v.deviated_placement);
    for (const MemberReport& mr : v.members) {
        Rat before = mode == WelfareMode::CostMinimizing
                         ? agent_cost(inst, mr.agent, v.truthful_placement)
                         : agent_utility(inst, mr.agent, v.truthful_placement);
        Rat after = mode == WelfareMode::CostMinimizing
                        ? agent_cost(inst, mr.agent, v.deviated_placement)
                        : agent_utility(inst, mr.agent, v.deviated_placement);
        CHECK(mr.welfare_before == before);
        CHECK(mr.welfare_after == after);
        if (mode == WelfareMode::CostMinimizing)
            CHECK(after < before);
        else
            CHECK(after > before);
    }
}

}  // namespace

TEST_CASE("preference audit finds the known ranking flip against group midpoints") {
    // agent 2 flips its ranking, dragging facility 2 from 9/10 to 19/20 and
    // pushing facility 1 to 0: true utility climbs from 3/5 to 19/30
    Instance inst = mult2(Rat(3, 2), {Rat(0), Rat(9, 10), Rat(1)}, {F1, F2, F1});
    AuditVerdict v = audit_sp(MechanismId::PreferredMidpoints, inst,
                              DeviationSpace::prefs_only(), WelfareMode::UtilityMaximizing);
    revalidate(MechanismId::PreferredMidpoints, inst, v, WelfareMode::UtilityMaximizing);
    CHECK(v.members.size() == 1);
    CHECK(v.members[0].agent == 2);
    CHECK(v.members[0].reported_pref == F2);
    CHECK(v.members[0].welfare_before == Rat(3, 5));
    CHECK(v.members[0].welfare_after == Rat(19, 30));
    CHECK(v.deviated_placement == Placement{Rat(0), Rat(19, 20)});
    CHECK(v.deviations_examined == 6);  // agents ascending, truthful combo counted
}

TEST_CASE("duplicate-location profiles neutralize the ranking flip") {
    // both agents at 0 keep facility 1 pinned whichever one flips, so every
    // single-agent and group deviation lands on a tie or a loss
    Instance inst = mult2(Rat(3, 2), {Rat(0), Rat(0), Rat(1, 3), Rat(1)},
                          {F1, F1, F1, F2});
    AuditVerdict sp = audit_sp(MechanismId::PreferredMidpoints, inst,
                               DeviationSpace::prefs_only(), WelfareMode::UtilityMaximizing);
    CHECK_FALSE(sp.violation_found);
    CHECK(sp.members.empty());
    CHECK(sp.deviations_examined == 8);  // 4 agents x 2 rankings
    AuditVerdict gsp = audit_gsp(MechanismId::PreferredMidpoints, inst,
                                 DeviationSpace::prefs_only(),
                                 WelfareMode::UtilityMaximizing, 4);
    CHECK_FALSE(gsp.violation_found);
}

TEST_CASE("location audit finds the known creep toward the center") {
    // reporting 21/50 drags the left facility from 1/5 to 21/100, cutting the
    // middle agent's second-choice cost below its first-choice tie
    Instance inst = walkthrough();
    LocationCandidates c;
    c.kind = LocationCandidates::Kind::ExplicitList;
    c.list = {Rat(21, 50)};
    AuditVerdict v = audit_sp(MechanismId::Midpoints, inst,
                              DeviationSpace::locations_only(c),
                              WelfareMode::CostMinimizing);
    revalidate(MechanismId::Midpoints, inst, v, WelfareMode::CostMinimizing);
    CHECK(v.members[0].agent == 1);
    CHECK(v.members[0].reported_x == Rat(21, 50));
    CHECK(v.members[0].welfare_before == Rat(3, 5));
    CHECK(v.members[0].welfare_after == Rat(57, 100));
    CHECK(v.deviated_placement == Placement{Rat(21, 100), Rat(1)});
    CHECK(v.deviations_examined == 4);  // own location joins each candidate list
}

TEST_CASE("audit_gsp with group size one reproduces audit_sp") {
    Instance witness = mult2(Rat(3, 2), {Rat(0), Rat(9, 10), Rat(1)}, {F1, F2, F1});
    Instance clean = mult2(Rat(3, 2), {Rat(0), Rat(0), Rat(1, 3), Rat(1)},
                           {F1, F1, F1, F2});
    for (const Instance& inst : {witness, clean}) {
        AuditVerdict a = audit_sp(MechanismId::PreferredMidpoints, inst,
                                  DeviationSpace::prefs_only(),
                                  WelfareMode::UtilityMaximizing);
        AuditVerdict b = audit_gsp(MechanismId::PreferredMidpoints, inst,
                                   DeviationSpace::prefs_only(),
                                   WelfareMode::UtilityMaximizing, 1);
        CHECK(a.violation_found == b.violation_found);
        CHECK(a.deviations_examined == b.deviations_examined);
        CHECK(a.truthful_placement == b.truthful_placement);
        CHECK(a.deviated_placement == b.deviated_placement);
        CHECK(a.members.size() == b.members.size());
        for (std::size_t i = 0; i < a.members.size(); ++i) {
            CHECK(a.members[i].agent == b.members[i].agent);
            CHECK(a.members[i].welfare_after == b.members[i].welfare_after);
        }
    }
}

TEST_CASE("extreme-point mechanism survives a grid-plus-snap group audit") {
    Instance inst = walkthrough();
    LocationCandidates c;
    c.grid_cells = 7;  // sevenths miss 2/5, so the snap adds one candidate
    AuditVerdict v = audit_gsp(MechanismId::Extremes, inst,
                               DeviationSpace::locations_only(c),
                               WelfareMode::CostMinimizing, 2);
    CHECK_FALSE(v.violation_found);
    // 9 candidates per agent: 3 singletons x 9 + 3 pairs x 81
    CHECK(v.deviations_examined == 270);
}

TEST_CASE("joint deviation budget guards only the group audit") {
    GeneratorSpec spec;  // defaults: n = 10, alpha = (1, 1)
    spec.seed = 7;
    Instance inst = generate(spec, 0);
    LocationCandidates c;
    c.grid_cells = 1000;
    // pairs alone need 45 * 1001^2 > 1e7 joint deviations
    CHECK_THROWS_AS(audit_gsp(MechanismId::Extremes, inst,
                              DeviationSpace::locations_only(c),
                              WelfareMode::CostMinimizing, 2),
                    std::invalid_argument);
    AuditVerdict v = audit_sp(MechanismId::Extremes, inst,
                              DeviationSpace::locations_only(c),
                              WelfareMode::CostMinimizing);
    CHECK_FALSE(v.violation_found);
}

TEST_CASE("audit rejects an empty deviation space and bad group sizes") {
    Instance inst = walkthrough();
    DeviationSpace empty;
    CHECK_THROWS_AS(audit_sp(MechanismId::Midpoints, inst, empty,
                             WelfareMode::CostMinimizing),
                    std::invalid_argument);
    CHECK_THROWS_AS(audit_gsp(MechanismId::Midpoints, inst, DeviationSpace::prefs_only(),
                              WelfareMode::CostMinimizing, 0),
                    std::invalid_argument);
}
