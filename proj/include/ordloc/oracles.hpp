#ifndef ORDLOC_ORACLES_HPP
#define ORDLOC_ORACLES_HPP

#include <vector>

#include "ordloc/core.hpp"

namespace ordloc {

struct OracleConfig {
    long grid_cells = 1000;  // grid {0, 1/G, ..., 1} per coordinate
    int refine_rounds = 2;   // local re-grids around all near-optimal points
    int refine_factor = 10;  // step shrink per round
};

struct OracleResult {
    Placement placement;
    Rat value;
    Rat error_bound;  // 0 for the exact oracle
    bool exact = false;
};

// Exact two-facility optimum when every rank coefficient is 1 (distances
// only, so preferences are irrelevant). Cost objectives enumerate contiguous
// splits of the sorted profile; TotalUtility = n - TotalCost and
// MinUtility = 1 - MaxCost share the optimizing placement.
OracleResult exact_optimum_gamma1(const std::vector<Rat>& locations, Objective obj);

// Certified grid search over {0, 1/G, ..., 1}^m. The returned value is the
// exact objective at the best grid point (float screening only shortlists
// candidates; every surviving candidate is re-evaluated in exact rationals,
// ties resolved toward the lexicographically smallest point). error_bound
// is the worst change the objective can suffer when each coordinate moves
// by half the final step. Each refinement round re-grids the +-step
// neighborhood of every point within the current certificate of the
// incumbent, not just the incumbent itself: the coarse point nearest the
// true optimizer always sits in that set, which is what keeps the shrunken
// certificate sound. Guards (G+1)-point-per-axis grids by G^m <= 1e8.
OracleResult grid_optimum(const Instance& inst, Objective obj, const OracleConfig& cfg = {});

// Exact objective value of one placement; same contract as objective_value.
Rat evaluate_candidate(const Instance& inst, const Placement& y, Objective obj);

// Half-step sensitivity of an objective: how much the value can move when
// every facility shifts by at most step/2.
Rat certificate_bound(const Instance& inst, Objective obj, const Rat& step);

}  // namespace ordloc

#endif
