#ifndef ORDLOC_AUDIT_HPP
#define ORDLOC_AUDIT_HPP

#include <cstdint>
#include <vector>

#include "ordloc/core.hpp"
#include "ordloc/mechanisms.hpp"

namespace ordloc {

// Candidate locations a deviating agent may report. GridPlusSnap(G') is
// {k/G'} plus every true location plus the endpoints; ExplicitList is the
// given values plus the deviator's own true location.
struct LocationCandidates {
    enum class Kind { GridPlusSnap, ExplicitList };
    Kind kind = Kind::GridPlusSnap;
    long grid_cells = 200;
    std::vector<Rat> list;
};

struct DeviationSpace {
    bool misreport_prefs = false;
    bool misreport_locations = false;
    LocationCandidates candidates;

    static DeviationSpace prefs_only();
    static DeviationSpace locations_only(LocationCandidates c);
    static DeviationSpace full(LocationCandidates c);
};

enum class WelfareMode { CostMinimizing, UtilityMaximizing };

struct MemberReport {
    std::size_t agent = 0;
    Rat true_x;
    std::vector<int> true_pref;
    Rat reported_x;
    std::vector<int> reported_pref;
    Rat welfare_before;
    Rat welfare_after;
};

struct AuditVerdict {
    bool violation_found = false;
    std::uint64_t deviations_examined = 0;
    // populated only on a violation
    std::vector<MemberReport> members;
    Placement truthful_placement;
    Placement deviated_placement;
};

// Exhaustive single-agent deviation search in a fixed deterministic order:
// agents ascending, rankings lexicographic, candidate locations ascending.
// The first strictly improving deviation is returned; ties never count.
// Welfare is always the deviator's true welfare (true location, true
// ranking) under the placement the mechanism picks for the misreports.
AuditVerdict audit_sp(MechanismId mech, const Instance& inst, const DeviationSpace& space,
                      WelfareMode mode);

// Group version: agent subsets of size 1..max_group_size (sizes ascending,
// subsets lexicographic), joint deviations as the cartesian product of the
// members' candidate reports (later members cycle fastest). A violation
// requires every member to strictly improve. Total joint deviations are
// guarded by 1e7. max_group_size = 1 reproduces audit_sp exactly.
AuditVerdict audit_gsp(MechanismId mech, const Instance& inst, const DeviationSpace& space,
                       WelfareMode mode, std::size_t max_group_size);

}  // namespace ordloc

#endif
