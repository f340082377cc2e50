#include "ordloc/experiments.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordloc {

namespace {

bool gamma1_exactly_solvable(const Instance& inst) {
    if (inst.facility_count() != 2 || inst.model != ModelKind::Multiplicative) return false;
    return std::all_of(inst.alpha.begin(), inst.alpha.end(),
                       [](const Rat& a) { return a == 1; });
}

bool worse(const RatioBracket& a, const RatioBracket& b) {
    // is b strictly worse than a
    if (a.hi < b.hi) return true;
    if (b.hi < a.hi) return false;
    return a.lo < b.lo;
}

}  // namespace

OptEnclosure enclose_optimum(const Instance& inst, Objective obj, const OracleConfig& cfg) {
    OptEnclosure out;
    if (gamma1_exactly_solvable(inst)) {
        OracleResult r = exact_optimum_gamma1(inst.locations(), obj);
        out.lo = out.hi = r.value;
        out.exact = true;
        out.placement = r.placement;
        return out;
    }
    OracleResult r = grid_optimum(inst, obj, cfg);
    if (is_cost_objective(obj)) {
        out.lo = std::max(Rat(0), Rat(r.value - r.error_bound));
        out.hi = r.value;
    } else {
        out.lo = r.value;
        out.hi = r.value + r.error_bound;
    }
    out.exact = false;
    out.placement = r.placement;
    return out;
}

RatioBracket ratio_bracket(const Rat& mech_value, const OptEnclosure& opt, Objective obj) {
    RatioBracket b;
    if (is_cost_objective(obj)) {
        b.lo = performance_ratio(mech_value, opt.hi, obj);
        b.hi = performance_ratio(mech_value, opt.lo, obj);
    } else {
        b.lo = performance_ratio(mech_value, opt.lo, obj);
        b.hi = performance_ratio(mech_value, opt.hi, obj);
    }
    return b;
}

RatioReport estimate_ratio(MechanismId mech, Objective obj, const GeneratorSpec& spec,
                           std::size_t trials, const OracleConfig& cfg) {
    if (trials == 0) throw std::invalid_argument("need at least one trial");

    RatioReport report;
    report.mechanism = mech;
    report.objective = obj;
    report.spec = spec;
    report.oracle = cfg;

    bool any_infinite = false;
    Rat midpoint_sum = 0;
    std::optional<Instance> worst_instance;

    for (std::uint64_t t = 0; t < trials; ++t) {
        Instance inst = generate(spec, t);
        Placement y = run_mechanism(mech, inst);
        TrialRow row;
        row.trial = t;
        row.mechanism_value = objective_value(inst, y, obj);
        OptEnclosure opt = enclose_optimum(inst, obj, cfg);
        row.opt_lo = opt.lo;
        row.opt_hi = opt.hi;
        row.opt_exact = opt.exact;
        row.ratio = ratio_bracket(row.mechanism_value, opt, obj);

        if (row.ratio.lo.infinite || row.ratio.hi.infinite)
            any_infinite = true;
        else
            midpoint_sum += (row.ratio.lo.value + row.ratio.hi.value) / 2;

        if (!worst_instance || worse(report.worst, row.ratio)) {
            report.worst = row.ratio;
            report.worst_trial = t;
            worst_instance = inst;
        }
        report.rows.push_back(std::move(row));
    }

    report.worst_instance = *worst_instance;
    report.mean_midpoint = any_infinite
                               ? RatioValue::infinity()
                               : RatioValue::finite(midpoint_sum / static_cast<long>(trials));
    return report;
}

BoundCheck verify_upper_bound(MechanismId mech, Objective obj, const Rat& bound,
                              const GeneratorSpec& spec, std::size_t trials,
                              const OracleConfig& cfg) {
    BoundCheck check;
    check.bound = bound;
    check.report = estimate_ratio(mech, obj, spec, trials, cfg);
    for (const TrialRow& row : check.report.rows)
        if (!(row.ratio.lo <= RatioValue::finite(bound))) {
            check.pass = false;
            break;
        }
    return check;
}

ReplayReport replay(const PaperInstance& pi, std::optional<MechanismId> mech,
                    const OracleConfig& cfg) {
    ReplayReport report;
    report.id = pi.id;
    report.all_anchors_match = true;
    report.all_brackets_contain = true;

    for (const ReferenceCheck& c : pi.checks) {
        Instance inst = check_instance(pi, c);
        ReplayCheckResult r;
        r.label = c.label;
        r.objective = c.objective;
        r.expected = c.value;
        r.evaluated = evaluate_candidate(inst, c.placement, c.objective);
        r.exact_match = r.evaluated == c.value;
        r.optimum = c.optimum;

        if (c.optimum) {
            OracleResult g = grid_optimum(inst, c.objective, cfg);
            r.grid_value = g.value;
            r.grid_bound = g.error_bound;
            r.bracket_contains = is_cost_objective(c.objective)
                                     ? c.value <= g.value && g.value - c.value <= g.error_bound
                                     : c.value >= g.value && c.value - g.value <= g.error_bound;
            report.all_brackets_contain = report.all_brackets_contain && r.bracket_contains;
        }
        report.all_anchors_match = report.all_anchors_match && r.exact_match;
        report.checks.push_back(std::move(r));
    }

    if (mech) {
        ReplayMechanismResult mr;
        mr.mechanism = *mech;
        mr.placement = run_mechanism(*mech, pi.instance);
        for (const ReferenceCheck& c : pi.checks) {
            if (std::none_of(mr.values.begin(), mr.values.end(),
                             [&](const auto& v) { return v.first == c.objective; }))
                mr.values.emplace_back(c.objective,
                                       objective_value(pi.instance, mr.placement, c.objective));
            if (!c.pref_override) {
                const Rat& mech_value =
                    std::find_if(mr.values.begin(), mr.values.end(),
                                 [&](const auto& v) { return v.first == c.objective; })
                        ->second;
                mr.ratios.emplace_back(c.label,
                                       performance_ratio(mech_value, c.value, c.objective));
            }
        }

        if (pi.deviation) {
            const ProofDeviation& d = *pi.deviation;
            ReplayDeviationResult dr;
            dr.agent = d.agent;
            dr.mode = is_cost_objective(pi.checks.front().objective)
                          ? WelfareMode::CostMinimizing
                          : WelfareMode::UtilityMaximizing;
            auto eval = [&](const Placement& y) {
                return dr.mode == WelfareMode::CostMinimizing
                           ? agent_cost(pi.instance, d.agent, y)
                           : agent_utility(pi.instance, d.agent, y);
            };
            dr.welfare_before = eval(mr.placement);
            Instance misreported = pi.instance;
            if (d.pref) misreported.agents[d.agent].pref = *d.pref;
            if (d.location) misreported.agents[d.agent].x = *d.location;
            Placement deviated = run_mechanism(*mech, misreported);
            dr.welfare_after = eval(deviated);
            dr.profitable = dr.mode == WelfareMode::CostMinimizing
                                ? dr.welfare_after < dr.welfare_before
                                : dr.welfare_after > dr.welfare_before;
            mr.deviation = std::move(dr);
        }
        report.mech = std::move(mr);
    }
    return report;
}

}  // namespace ordloc
