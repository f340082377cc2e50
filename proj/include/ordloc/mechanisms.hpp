#ifndef ORDLOC_MECHANISMS_HPP
#define ORDLOC_MECHANISMS_HPP

#include <string_view>
#include <vector>

#include "ordloc/core.hpp"

namespace ordloc {

// Order statistics of a location profile around its center.
//   lt/rt: leftmost/rightmost location, cen: their midpoint,
//   lb: rightmost location <= cen, rb: leftmost location >= cen,
//   dist: max(lb - lt, rt - rb), the larger one-sided spread.
struct BoundaryStats {
    Rat lt, rt, cen, lb, rb, dist;
};

BoundaryStats boundary_stats(const std::vector<Rat>& locations);

enum class MechanismId {
    Midpoints,             // (lt+lb)/2 and (rt+rb)/2
    PreferredMidpoints,    // midpoint of each top-choice group's extremes
    FixedCenter,           // every facility at 1/2
    Extremes,              // lt and rt
    OptimalSplitTotalCost, // best contiguous split, lower median per part
    MedianPerFacility,     // lower median of each top-choice group
};

// Runs a mechanism on the reported instance. Facility count must be 2 for
// every mechanism except FixedCenter, which places all m facilities at 1/2.
// A facility whose preference group is empty falls back to 1/2.
// With a single agent, Midpoints and Extremes place both facilities at x_1.
Placement run_mechanism(MechanismId mech, const Instance& inst);

// Lower median: element with 1-based index ceil(k/2) of a sorted range.
Rat lower_median(std::vector<Rat> values);

const char* mechanism_name(MechanismId mech);
MechanismId parse_mechanism(std::string_view name);  // throws std::invalid_argument
std::vector<MechanismId> all_mechanisms();

}  // namespace ordloc

#endif
