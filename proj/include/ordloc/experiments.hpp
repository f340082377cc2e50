#ifndef ORDLOC_EXPERIMENTS_HPP
#define ORDLOC_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordloc/audit.hpp"
#include "ordloc/catalog.hpp"
#include "ordloc/generators.hpp"
#include "ordloc/mechanisms.hpp"
#include "ordloc/oracles.hpp"

namespace ordloc {

// [lo, hi] enclosure of mechanism-vs-optimum. Exact oracles give lo == hi;
// grid certificates widen the bracket and are reported as-is (lo may dip
// below 1 and is never clamped).
struct RatioBracket {
    RatioValue lo, hi;
};

struct TrialRow {
    std::uint64_t trial = 0;
    Rat mechanism_value;
    Rat opt_lo, opt_hi;  // enclosure of the true optimum
    bool opt_exact = false;
    RatioBracket ratio;
};

struct RatioReport {
    MechanismId mechanism;
    Objective objective;
    GeneratorSpec spec;
    OracleConfig oracle;
    std::vector<TrialRow> rows;
    RatioBracket worst;           // max hi, then max lo, then earliest trial
    std::uint64_t worst_trial = 0;
    Instance worst_instance;
    RatioValue mean_midpoint;     // mean of (lo+hi)/2, infinite if any trial is
};

// Enclose OPT for one instance: the exact split oracle when it applies
// (two facilities, multiplicative, all-ones alpha), the certified grid
// otherwise. Returns {lo, hi, exact}.
struct OptEnclosure {
    Rat lo, hi;
    bool exact = false;
    Placement placement;
};
OptEnclosure enclose_optimum(const Instance& inst, Objective obj, const OracleConfig& cfg);

RatioBracket ratio_bracket(const Rat& mech_value, const OptEnclosure& opt, Objective obj);

RatioReport estimate_ratio(MechanismId mech, Objective obj, const GeneratorSpec& spec,
                           std::size_t trials, const OracleConfig& cfg = {});

// Pass iff every trial satisfies hi <= bound + (hi - lo), i.e. lo <= bound:
// the certificate width is granted as slack, the theorem bound is not eroded.
struct BoundCheck {
    bool pass = true;
    Rat bound;
    RatioReport report;
};
BoundCheck verify_upper_bound(MechanismId mech, Objective obj, const Rat& bound,
                              const GeneratorSpec& spec, std::size_t trials,
                              const OracleConfig& cfg = {});

// ---- catalog replays -------------------------------------------------------

struct ReplayCheckResult {
    std::string label;
    Objective objective;
    Rat expected;
    Rat evaluated;
    bool exact_match = false;
    bool optimum = false;  // grid fields below are meaningful only when set
    Rat grid_value, grid_bound;
    bool bracket_contains = false;
};

struct ReplayDeviationResult {
    std::size_t agent = 0;
    WelfareMode mode = WelfareMode::UtilityMaximizing;
    Rat welfare_before, welfare_after;
    bool profitable = false;
};

struct ReplayMechanismResult {
    MechanismId mechanism;
    Placement placement;
    std::vector<std::pair<Objective, Rat>> values;       // per distinct check objective
    std::vector<std::pair<std::string, RatioValue>> ratios;  // vs base-profile anchors
    std::optional<ReplayDeviationResult> deviation;
};

struct ReplayReport {
    std::string id;
    std::vector<ReplayCheckResult> checks;
    bool all_anchors_match = false;
    bool all_brackets_contain = false;
    std::optional<ReplayMechanismResult> mech;
};

ReplayReport replay(const PaperInstance& pi, std::optional<MechanismId> mech,
                    const OracleConfig& cfg = {});

}  // namespace ordloc

#endif
