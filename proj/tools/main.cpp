// ordloc: facility location on [0,1] with ordinal preferences.
// Subcommands: eval, run, opt, audit, sweep, replay, catalog.
// Exit codes: 0 ok, 2 usage/parse error, 3 audit violation, 4 bound violated.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ordloc/audit.hpp"
#include "ordloc/catalog.hpp"
#include "ordloc/core.hpp"
#include "ordloc/experiments.hpp"
#include "ordloc/generators.hpp"
#include "ordloc/io.hpp"
#include "ordloc/mechanisms.hpp"
#include "ordloc/oracles.hpp"
#include "ordloc/rational.hpp"

using nlohmann::ordered_json;
using namespace ordloc;

namespace {

std::string show(const Rat& v) { return rat_to_string(v) + " (" + rat_to_decimal(v) + ")"; }

std::string show(const RatioValue& r) {
    if (r.infinite) return "inf";
    return show(r.value);
}

std::string pref_string(const std::vector<int>& pref) {
    std::string out;
    for (std::size_t k = 0; k < pref.size(); ++k) {
        if (k) out += '>';
        out += 'F' + std::to_string(pref[k] + 1);
    }
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    for (char c : text) {
        if (c == ',' || c == ';') {
            out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    out.push_back(item);
    return out;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
    std::vector<Rat> out;
    for (const std::string& item : split_list(text)) out.push_back(parse_rational(item));
    return out;
}

ordered_json placement_json(const Placement& y) {
    ordered_json a = ordered_json::array();
    for (const Rat& v : y) a.push_back(rat_to_string(v));
    return a;
}

ordered_json instance_json(const Instance& inst) {
    return ordered_json::parse(instance_to_text(inst));
}

// Accumulates CSV rows and a structured report, then writes both on exit.
// Wall-clock lands only in the report so CSV output is run-independent.
struct Reporter {
    std::string csv_path, json_path;
    std::vector<CsvRow> rows;
    ordered_json report;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int finish(int code) {
        if (!csv_path.empty()) {
            std::ofstream out(csv_path);
            if (!out) throw std::runtime_error("cannot write " + csv_path);
            out << kCsvHeader << '\n';
            for (const CsvRow& row : rows) out << csv_line(row) << '\n';
        }
        if (!json_path.empty()) {
            const auto elapsed = std::chrono::steady_clock::now() - start;
            report["wall_clock_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
            std::ofstream out(json_path);
            if (!out) throw std::runtime_error("cannot write " + json_path);
            out << report.dump(2) << '\n';
        }
        return code;
    }
};

// ---- instance acquisition ---------------------------------------------------

struct InstanceFlags {
    std::string file;
    std::string id;
    std::string alpha = "3";
    std::string epsilon = "1/1000";
    std::size_t n = 0;  // 0 = entry default
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
    auto* file = cmd->add_option("--instance", f.file, "instance file (JSON document)");
    auto* id = cmd->add_option("--id", f.id, "catalog instance id (see `catalog`)");
    cmd->add_option("--alpha", f.alpha, "catalog rank coefficient, e.g. 3 or 3/2");
    cmd->add_option("--epsilon", f.epsilon, "catalog epsilon parameter (default 1/1000)");
    cmd->add_option("--n", f.n, "catalog agent count, entries that take one");
    file->excludes(id);
}

struct LoadedInstance {
    Instance inst;
    std::optional<PaperInstance> paper;
    std::string source;
};

LoadedInstance load_instance(const InstanceFlags& f) {
    if (!f.file.empty())
        return {load_instance_file(f.file), std::nullopt, f.file};
    if (!f.id.empty()) {
        std::optional<std::size_t> n;
        if (f.n > 0) n = f.n;
        PaperInstance pi =
            build_catalog_instance(f.id, parse_rational(f.alpha), parse_rational(f.epsilon), n);
        Instance inst = pi.instance;
        return {std::move(inst), std::move(pi), f.id};
    }
    throw std::runtime_error("need --instance FILE or --id ID");
}

ordered_json instance_config(const InstanceFlags& f) {
    ordered_json c;
    if (!f.file.empty()) {
        c["instance"] = f.file;
    } else {
        c["id"] = f.id;
        c["alpha"] = rat_to_string(parse_rational(f.alpha));
        c["epsilon"] = rat_to_string(parse_rational(f.epsilon));
        if (f.n > 0) c["n"] = f.n;
    }
    return c;
}

// ---- oracle flags -----------------------------------------------------------

struct OracleFlags {
    long grid = 1000;
    int refine = 2;
    int refine_factor = 10;
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& f) {
    cmd->add_option("--grid", f.grid, "grid cells per axis (default 1000)");
    cmd->add_option("--refine", f.refine, "refinement rounds (default 2)");
    cmd->add_option("--refine-factor", f.refine_factor, "step shrink per round (default 10)");
}

OracleConfig oracle_config(const OracleFlags& f) { return {f.grid, f.refine, f.refine_factor}; }

ordered_json oracle_json(const OracleFlags& f) {
    ordered_json c;
    c["grid"] = f.grid;
    c["refine"] = f.refine;
    c["refine_factor"] = f.refine_factor;
    return c;
}

void print_instance_summary(const Instance& inst) {
    std::cout << "model " << model_name(inst.model) << ", alpha "
              << alpha_to_string(inst.alpha) << ", agents " << inst.agent_count() << "\n";
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
    InstanceFlags inst;
    std::string placement;
    std::string objective;
};

int run_eval(const EvalArgs& a, Reporter& rep) {
    LoadedInstance li = load_instance(a.inst);
    const Instance& inst = li.inst;
    Objective obj = parse_objective(a.objective);
    Placement y = parse_placement(a.placement, inst.facility_count());

    print_instance_summary(inst);
    std::cout << "placement " << placement_to_string(y) << "\n";
    ordered_json agents = ordered_json::array();
    for (std::size_t i = 0; i < inst.agent_count(); ++i) {
        Rat c = agent_cost(inst, i, y);
        Rat u = agent_utility(inst, i, y);
        std::cout << "agent " << i + 1 << ": x=" << rat_to_string(inst.agents[i].x) << " "
                  << pref_string(inst.agents[i].pref) << "  cost " << show(c) << "  utility "
                  << show(u) << "\n";
        ordered_json ja;
        ja["agent"] = i + 1;
        ja["x"] = rat_to_string(inst.agents[i].x);
        ja["cost"] = rat_to_string(c);
        ja["utility"] = rat_to_string(u);
        agents.push_back(std::move(ja));
    }
    Rat value = objective_value(inst, y, obj);
    std::cout << objective_name(obj) << " = " << show(value) << "\n";

    CsvRow row;
    row.command = "eval";
    row.objective = objective_name(obj);
    row.alpha = alpha_to_string(inst.alpha);
    row.n = std::to_string(inst.agent_count());
    row.value_lo = row.value_hi = rat_to_string(value);
    row.verdict = "ok";
    rep.rows.push_back(std::move(row));

    rep.report["command"] = "eval";
    rep.report["config"] = instance_config(a.inst);
    rep.report["config"]["placement"] = placement_to_string(y);
    rep.report["config"]["objective"] = objective_name(obj);
    rep.report["results"]["agents"] = std::move(agents);
    rep.report["results"]["value"] = rat_to_string(value);
    rep.report["results"]["value_decimal"] = rat_to_decimal(value);
    return 0;
}

// ---- run --------------------------------------------------------------------

struct RunArgs {
    InstanceFlags inst;
    std::string mech;
};

int run_run(const RunArgs& a, Reporter& rep) {
    LoadedInstance li = load_instance(a.inst);
    const Instance& inst = li.inst;
    MechanismId mech = parse_mechanism(a.mech);
    Placement y = run_mechanism(mech, inst);

    print_instance_summary(inst);
    std::cout << mechanism_name(mech) << " -> " << placement_to_string(y) << "\n";

    rep.report["command"] = "run";
    rep.report["config"] = instance_config(a.inst);
    rep.report["config"]["mechanism"] = mechanism_name(mech);
    rep.report["results"]["placement"] = placement_json(y);
    for (Objective obj : {Objective::TotalCost, Objective::MaxCost, Objective::TotalUtility,
                          Objective::MinUtility}) {
        Rat value = objective_value(inst, y, obj);
        std::cout << "  " << objective_name(obj) << " = " << show(value) << "\n";
        rep.report["results"]["values"][objective_name(obj)] = rat_to_string(value);

        CsvRow row;
        row.command = "run";
        row.mechanism = mechanism_name(mech);
        row.objective = objective_name(obj);
        row.alpha = alpha_to_string(inst.alpha);
        row.n = std::to_string(inst.agent_count());
        row.value_lo = row.value_hi = rat_to_string(value);
        row.verdict = "ok";
        rep.rows.push_back(std::move(row));
    }
    return 0;
}

// ---- opt --------------------------------------------------------------------

struct OptArgs {
    InstanceFlags inst;
    std::string objective;
    std::string oracle = "auto";
    OracleFlags oracle_flags;
};

int run_opt(const OptArgs& a, Reporter& rep) {
    LoadedInstance li = load_instance(a.inst);
    const Instance& inst = li.inst;
    Objective obj = parse_objective(a.objective);
    OracleConfig cfg = oracle_config(a.oracle_flags);

    OptEnclosure enc;
    if (a.oracle == "auto") {
        enc = enclose_optimum(inst, obj, cfg);
    } else if (a.oracle == "exact") {
        bool unit = inst.facility_count() == 2 && inst.model == ModelKind::Multiplicative;
        for (const Rat& al : inst.alpha) unit = unit && al == 1;
        if (!unit)
            throw std::runtime_error(
                "exact oracle needs two facilities and all-ones multiplicative alpha");
        OracleResult r = exact_optimum_gamma1(inst.locations(), obj);
        enc.lo = enc.hi = r.value;
        enc.exact = true;
        enc.placement = r.placement;
    } else if (a.oracle == "grid") {
        OracleResult r = grid_optimum(inst, obj, cfg);
        if (is_cost_objective(obj)) {
            enc.lo = std::max(Rat(0), Rat(r.value - r.error_bound));
            enc.hi = r.value;
        } else {
            enc.lo = r.value;
            enc.hi = r.value + r.error_bound;
        }
        enc.placement = r.placement;
    } else {
        throw std::runtime_error("--oracle must be auto, exact, or grid");
    }

    print_instance_summary(inst);
    std::cout << "optimal " << objective_name(obj) << " placement "
              << placement_to_string(enc.placement) << "\n";
    if (enc.exact)
        std::cout << "value " << show(enc.hi) << " (exact)\n";
    else
        std::cout << "value in [" << rat_to_string(enc.lo) << ", " << rat_to_string(enc.hi)
                  << "], width " << show(enc.hi - enc.lo) << "\n";

    CsvRow row;
    row.command = "opt";
    row.objective = objective_name(obj);
    row.alpha = alpha_to_string(inst.alpha);
    row.n = std::to_string(inst.agent_count());
    row.value_lo = rat_to_string(enc.lo);
    row.value_hi = rat_to_string(enc.hi);
    row.opt_lo = rat_to_string(enc.lo);
    row.opt_hi = rat_to_string(enc.hi);
    row.verdict = enc.exact ? "exact" : "certified";
    rep.rows.push_back(std::move(row));

    rep.report["command"] = "opt";
    rep.report["config"] = instance_config(a.inst);
    rep.report["config"]["objective"] = objective_name(obj);
    rep.report["config"]["oracle"] = a.oracle;
    rep.report["config"]["oracle_config"] = oracle_json(a.oracle_flags);
    rep.report["results"]["placement"] = placement_json(enc.placement);
    rep.report["results"]["lo"] = rat_to_string(enc.lo);
    rep.report["results"]["hi"] = rat_to_string(enc.hi);
    rep.report["results"]["exact"] = enc.exact;
    return 0;
}

// ---- audit ------------------------------------------------------------------

struct AuditArgs {
    InstanceFlags inst;
    std::string mech;
    std::string space = "prefs";
    long grid_cells = 200;
    std::string locations;
    std::string mode = "utility";
    std::size_t group_size = 1;
};

int run_audit(const AuditArgs& a, Reporter& rep) {
    LoadedInstance li = load_instance(a.inst);
    const Instance& inst = li.inst;
    MechanismId mech = parse_mechanism(a.mech);

    LocationCandidates cands;
    if (!a.locations.empty()) {
        cands.kind = LocationCandidates::Kind::ExplicitList;
        cands.list = parse_rational_list(a.locations);
    } else {
        cands.kind = LocationCandidates::Kind::GridPlusSnap;
        cands.grid_cells = a.grid_cells;
    }
    DeviationSpace space;
    if (a.space == "prefs") {
        if (!a.locations.empty())
            throw std::runtime_error("--locations only applies to --space locations|full");
        space = DeviationSpace::prefs_only();
    } else if (a.space == "locations") {
        space = DeviationSpace::locations_only(cands);
    } else if (a.space == "full") {
        space = DeviationSpace::full(cands);
    } else {
        throw std::runtime_error("--space must be prefs, locations, or full");
    }
    WelfareMode mode;
    if (a.mode == "utility")
        mode = WelfareMode::UtilityMaximizing;
    else if (a.mode == "cost")
        mode = WelfareMode::CostMinimizing;
    else
        throw std::runtime_error("--mode must be utility or cost");

    AuditVerdict verdict = audit_gsp(mech, inst, space, mode, a.group_size);

    print_instance_summary(inst);
    std::cout << mechanism_name(mech) << " audit (" << a.space << ", " << a.mode
              << " welfare, groups <= " << a.group_size << "): "
              << (verdict.violation_found ? "VIOLATION" : "no violation") << " after "
              << verdict.deviations_examined << " deviations\n";
    ordered_json members = ordered_json::array();
    if (verdict.violation_found) {
        std::cout << "  truthful placement " << placement_to_string(verdict.truthful_placement)
                  << " -> deviated " << placement_to_string(verdict.deviated_placement) << "\n";
        for (const MemberReport& mr : verdict.members) {
            std::cout << "  agent " << mr.agent + 1 << ": reports x="
                      << rat_to_string(mr.reported_x) << " " << pref_string(mr.reported_pref)
                      << " (truth x=" << rat_to_string(mr.true_x) << " "
                      << pref_string(mr.true_pref) << "), welfare "
                      << rat_to_string(mr.welfare_before) << " -> "
                      << rat_to_string(mr.welfare_after) << "\n";
            ordered_json jm;
            jm["agent"] = mr.agent + 1;
            jm["true_x"] = rat_to_string(mr.true_x);
            jm["reported_x"] = rat_to_string(mr.reported_x);
            jm["true_pref"] = pref_string(mr.true_pref);
            jm["reported_pref"] = pref_string(mr.reported_pref);
            jm["welfare_before"] = rat_to_string(mr.welfare_before);
            jm["welfare_after"] = rat_to_string(mr.welfare_after);
            members.push_back(std::move(jm));
        }
    }

    CsvRow row;
    row.command = "audit";
    row.mechanism = mechanism_name(mech);
    row.alpha = alpha_to_string(inst.alpha);
    row.n = std::to_string(inst.agent_count());
    row.verdict = verdict.violation_found ? "violation" : "no-violation";
    rep.rows.push_back(std::move(row));

    rep.report["command"] = "audit";
    rep.report["config"] = instance_config(a.inst);
    rep.report["config"]["mechanism"] = mechanism_name(mech);
    rep.report["config"]["space"] = a.space;
    if (a.space != "prefs") {
        if (!a.locations.empty())
            rep.report["config"]["locations"] = a.locations;
        else
            rep.report["config"]["grid_cells"] = a.grid_cells;
    }
    rep.report["config"]["mode"] = a.mode;
    rep.report["config"]["group_size"] = a.group_size;
    rep.report["results"]["violation_found"] = verdict.violation_found;
    rep.report["results"]["deviations_examined"] = verdict.deviations_examined;
    if (verdict.violation_found) {
        rep.report["results"]["truthful_placement"] = placement_json(verdict.truthful_placement);
        rep.report["results"]["deviated_placement"] = placement_json(verdict.deviated_placement);
        rep.report["results"]["members"] = std::move(members);
    }
    return verdict.violation_found ? 3 : 0;
}

// ---- sweep ------------------------------------------------------------------

struct SweepArgs {
    std::string mech;
    std::string objective;
    std::size_t n = 10;
    std::size_t m = 2;
    std::string model = "multiplicative";
    std::string alpha = "1;1";
    std::string location_law = "uniform";
    std::string cluster_gap = "1/2";
    std::string pref_law = "iid";
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::string bound;
    OracleFlags oracle_flags;
};

std::uint64_t resolve_seed(std::uint64_t flag_seed) {
    const char* env = std::getenv("ORDLOC_SEED");
    if (!env) return flag_seed;
    std::string text(env);
    std::size_t pos = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("ORDLOC_SEED is not an unsigned integer: " + text);
    }
    if (pos != text.size())
        throw std::runtime_error("ORDLOC_SEED is not an unsigned integer: " + text);
    return value;
}

int run_sweep(const SweepArgs& a, Reporter& rep) {
    MechanismId mech = parse_mechanism(a.mech);
    Objective obj = parse_objective(a.objective);

    GeneratorSpec spec;
    spec.n = a.n;
    spec.m = a.m;
    spec.model = parse_model(a.model);
    spec.alpha = parse_rational_list(a.alpha);
    spec.location_law = parse_location_law(a.location_law);
    spec.cluster_gap = parse_rational(a.cluster_gap);
    spec.preference_law = parse_preference_law(a.pref_law);
    spec.seed = resolve_seed(a.seed);
    OracleConfig cfg = oracle_config(a.oracle_flags);

    std::optional<Rat> bound;
    if (!a.bound.empty()) bound = parse_rational(a.bound);

    RatioReport report = estimate_ratio(mech, obj, spec, a.trials, cfg);
    bool pass = true;
    if (bound)
        for (const TrialRow& row : report.rows)
            pass = pass && row.ratio.lo <= RatioValue::finite(*bound);

    std::cout << "sweep " << mechanism_name(mech) << " / " << objective_name(obj) << ", "
              << a.trials << " trials, seed " << spec.seed << "\n";
    std::cout << "worst ratio in [" << ratio_to_string(report.worst.lo) << ", "
              << ratio_to_string(report.worst.hi) << "] at trial " << report.worst_trial << "\n";
    std::cout << "mean ratio midpoint " << show(report.mean_midpoint) << "\n";
    if (bound)
        std::cout << "bound " << rat_to_string(*bound) << " -> " << (pass ? "PASS" : "FAIL")
                  << "\n";

    const std::string alpha_joined = alpha_to_string(spec.alpha);
    ordered_json trials_json = ordered_json::array();
    for (const TrialRow& row : report.rows) {
        CsvRow cr;
        cr.command = "sweep";
        cr.mechanism = mechanism_name(mech);
        cr.objective = objective_name(obj);
        cr.alpha = alpha_joined;
        cr.n = std::to_string(spec.n);
        cr.seed = std::to_string(spec.seed);
        cr.value_lo = cr.value_hi = rat_to_string(row.mechanism_value);
        cr.opt_lo = rat_to_string(row.opt_lo);
        cr.opt_hi = rat_to_string(row.opt_hi);
        cr.ratio_lo = ratio_to_string(row.ratio.lo);
        cr.ratio_hi = ratio_to_string(row.ratio.hi);
        if (bound)
            cr.verdict = row.ratio.lo <= RatioValue::finite(*bound) ? "pass" : "fail";
        rep.rows.push_back(std::move(cr));

        ordered_json jt;
        jt["trial"] = row.trial;
        jt["value"] = rat_to_string(row.mechanism_value);
        jt["opt_lo"] = rat_to_string(row.opt_lo);
        jt["opt_hi"] = rat_to_string(row.opt_hi);
        jt["opt_exact"] = row.opt_exact;
        jt["ratio_lo"] = ratio_to_string(row.ratio.lo);
        jt["ratio_hi"] = ratio_to_string(row.ratio.hi);
        trials_json.push_back(std::move(jt));
    }

    rep.report["command"] = "sweep";
    ordered_json& c = rep.report["config"];
    c["mechanism"] = mechanism_name(mech);
    c["objective"] = objective_name(obj);
    c["n"] = spec.n;
    c["m"] = spec.m;
    c["model"] = model_name(spec.model);
    c["alpha"] = alpha_joined;
    c["location_law"] = location_law_name(spec.location_law);
    if (spec.location_law == LocationLaw::TwoClusters)
        c["cluster_gap"] = rat_to_string(spec.cluster_gap);
    c["preference_law"] = preference_law_name(spec.preference_law);
    c["trials"] = a.trials;
    c["seed"] = spec.seed;
    if (bound) c["verify_bound"] = rat_to_string(*bound);
    c["oracle_config"] = oracle_json(a.oracle_flags);
    rep.report["results"]["trials"] = std::move(trials_json);
    rep.report["results"]["worst_trial"] = report.worst_trial;
    rep.report["results"]["worst_ratio_lo"] = ratio_to_string(report.worst.lo);
    rep.report["results"]["worst_ratio_hi"] = ratio_to_string(report.worst.hi);
    rep.report["results"]["worst_instance"] = instance_json(report.worst_instance);
    rep.report["results"]["mean_ratio_midpoint"] = ratio_to_string(report.mean_midpoint);
    if (bound) rep.report["results"]["bound_satisfied"] = pass;
    return bound && !pass ? 4 : 0;
}

// ---- replay -----------------------------------------------------------------

struct ReplayArgs {
    InstanceFlags inst;
    std::string mech;
    OracleFlags oracle_flags;
};

int run_replay(const ReplayArgs& a, Reporter& rep) {
    if (a.inst.id.empty()) throw std::runtime_error("replay needs --id (see `catalog`)");
    std::optional<std::size_t> n;
    if (a.inst.n > 0) n = a.inst.n;
    PaperInstance pi = build_catalog_instance(a.inst.id, parse_rational(a.inst.alpha),
                                              parse_rational(a.inst.epsilon), n);
    std::optional<MechanismId> mech;
    if (!a.mech.empty()) mech = parse_mechanism(a.mech);
    OracleConfig cfg = oracle_config(a.oracle_flags);

    ReplayReport report = replay(pi, mech, cfg);

    std::cout << pi.id << ": " << pi.description << "\n";
    print_instance_summary(pi.instance);
    for (const auto& [name, value] : pi.parameters)
        std::cout << "  " << name << " = " << show(value) << "\n";
    for (const ReplayCheckResult& c : report.checks) {
        std::cout << "check " << c.label << ": " << objective_name(c.objective) << " at reference"
                  << " = " << show(c.evaluated) << ", expected " << rat_to_string(c.expected)
                  << " -> " << (c.exact_match ? "match" : "MISMATCH");
        if (c.optimum)
            std::cout << "; grid [" << rat_to_string(c.grid_value) << " +/- "
                      << rat_to_string(c.grid_bound) << "] -> "
                      << (c.bracket_contains ? "contains" : "OUTSIDE");
        std::cout << "\n";

        CsvRow row;
        row.command = "replay";
        row.mechanism = mech ? mechanism_name(*mech) : "";
        row.objective = objective_name(c.objective);
        row.alpha = alpha_to_string(pi.instance.alpha);
        row.n = std::to_string(pi.instance.agent_count());
        row.value_lo = row.value_hi = rat_to_string(c.expected);
        if (c.optimum) {
            if (is_cost_objective(c.objective)) {
                row.opt_lo = rat_to_string(std::max(Rat(0), Rat(c.grid_value - c.grid_bound)));
                row.opt_hi = rat_to_string(c.grid_value);
            } else {
                row.opt_lo = rat_to_string(c.grid_value);
                row.opt_hi = rat_to_string(c.grid_value + c.grid_bound);
            }
            row.verdict = !c.exact_match ? "mismatch" : c.bracket_contains ? "ok" : "bracket-miss";
        } else {
            row.verdict = c.exact_match ? "ok" : "mismatch";
        }
        rep.rows.push_back(std::move(row));
    }

    ordered_json checks = ordered_json::array();
    for (const ReplayCheckResult& c : report.checks) {
        ordered_json jc;
        jc["label"] = c.label;
        jc["objective"] = objective_name(c.objective);
        jc["expected"] = rat_to_string(c.expected);
        jc["evaluated"] = rat_to_string(c.evaluated);
        jc["exact_match"] = c.exact_match;
        jc["optimum"] = c.optimum;
        if (c.optimum) {
            jc["grid_value"] = rat_to_string(c.grid_value);
            jc["grid_bound"] = rat_to_string(c.grid_bound);
            jc["bracket_contains"] = c.bracket_contains;
        }
        checks.push_back(std::move(jc));
    }

    rep.report["command"] = "replay";
    rep.report["config"] = instance_config(a.inst);
    if (mech) rep.report["config"]["mechanism"] = mechanism_name(*mech);
    rep.report["config"]["oracle_config"] = oracle_json(a.oracle_flags);
    rep.report["results"]["description"] = pi.description;
    for (const auto& [name, value] : pi.parameters)
        rep.report["results"]["parameters"][name] = rat_to_string(value);
    rep.report["results"]["instance"] = instance_json(pi.instance);
    rep.report["results"]["checks"] = std::move(checks);
    rep.report["results"]["all_anchors_match"] = report.all_anchors_match;
    rep.report["results"]["all_brackets_contain"] = report.all_brackets_contain;

    if (report.mech) {
        const ReplayMechanismResult& mr = *report.mech;
        std::cout << mechanism_name(mr.mechanism) << " -> " << placement_to_string(mr.placement)
                  << "\n";
        ordered_json jm;
        jm["mechanism"] = mechanism_name(mr.mechanism);
        jm["placement"] = placement_json(mr.placement);
        for (const auto& [obj, value] : mr.values) {
            std::cout << "  " << objective_name(obj) << " = " << show(value) << "\n";
            jm["values"][objective_name(obj)] = rat_to_string(value);
        }
        for (const auto& [label, ratio] : mr.ratios) {
            std::cout << "  ratio vs " << label << " = " << show(ratio) << "\n";
            jm["ratios"][label] = ratio_to_string(ratio);
        }
        if (mr.deviation) {
            const ReplayDeviationResult& d = *mr.deviation;
            std::cout << "  recorded deviation by agent " << d.agent + 1 << ": welfare "
                      << rat_to_string(d.welfare_before) << " -> " << rat_to_string(d.welfare_after)
                      << (d.profitable ? " (profitable)" : " (not profitable)") << "\n";
            jm["deviation"]["agent"] = d.agent + 1;
            jm["deviation"]["welfare_before"] = rat_to_string(d.welfare_before);
            jm["deviation"]["welfare_after"] = rat_to_string(d.welfare_after);
            jm["deviation"]["profitable"] = d.profitable;
        }
        rep.report["results"]["mechanism_run"] = std::move(jm);
    }

    if (!report.all_anchors_match)
        throw std::runtime_error("reference value mismatch in replay of " + pi.id);
    return 0;
}

// ---- catalog ----------------------------------------------------------------

int run_catalog(Reporter& rep) {
    std::cout << std::left << std::setw(6) << "id" << std::setw(22) << "alpha" << std::setw(9)
              << "epsilon" << std::setw(5) << "n"
              << "description\n";
    ordered_json entries = ordered_json::array();
    for (const CatalogEntryInfo& e : catalog()) {
        std::cout << std::left << std::setw(6) << e.id << std::setw(22) << e.alpha_validity
                  << std::setw(9) << (e.uses_epsilon ? "yes" : "-") << std::setw(5)
                  << (e.uses_n ? "yes" : "-") << e.description << "\n";
        ordered_json je;
        je["id"] = e.id;
        je["alpha"] = e.alpha_validity;
        je["uses_epsilon"] = e.uses_epsilon;
        je["uses_n"] = e.uses_n;
        je["description"] = e.description;
        entries.push_back(std::move(je));
    }
    rep.report["command"] = "catalog";
    rep.report["results"]["entries"] = std::move(entries);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"facility location on the unit interval with ordinal preferences"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a placement on an instance");
    add_instance_flags(eval, eval_args.inst);
    eval->add_option("--placement", eval_args.placement, "facility coordinates, e.g. 0.2,0.8")
        ->required();
    eval->add_option("--objective", eval_args.objective,
                     "total-cost | max-cost | total-utility | min-utility")
        ->required();

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "run a mechanism on an instance");
    add_instance_flags(run, run_args.inst);
    run->add_option("--mech", run_args.mech, "mechanism name")->required();

    OptArgs opt_args;
    CLI::App* opt = app.add_subcommand("opt", "optimize an objective over placements");
    add_instance_flags(opt, opt_args.inst);
    opt->add_option("--objective", opt_args.objective, "objective name")->required();
    opt->add_option("--oracle", opt_args.oracle, "auto | exact | grid (default auto)");
    add_oracle_flags(opt, opt_args.oracle_flags);

    AuditArgs audit_args;
    CLI::App* audit = app.add_subcommand("audit", "search for profitable misreports");
    add_instance_flags(audit, audit_args.inst);
    audit->add_option("--mech", audit_args.mech, "mechanism name")->required();
    audit->add_option("--space", audit_args.space, "prefs | locations | full (default prefs)");
    audit->add_option("--grid-cells", audit_args.grid_cells,
                      "location candidate grid (default 200)");
    audit->add_option("--locations", audit_args.locations,
                      "explicit location candidates, e.g. 0,1/2,1");
    audit->add_option("--mode", audit_args.mode, "utility | cost welfare (default utility)");
    audit->add_option("--group-size", audit_args.group_size,
                      "largest deviating coalition (default 1)");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "mechanism-vs-optimum ratios on random instances");
    sweep->add_option("--mech", sweep_args.mech, "mechanism name")->required();
    sweep->add_option("--objective", sweep_args.objective, "objective name")->required();
    sweep->add_option("--n", sweep_args.n, "agents per instance (default 10)");
    sweep->add_option("--m", sweep_args.m, "facilities (default 2)");
    sweep->add_option("--model", sweep_args.model, "multiplicative | additive");
    sweep->add_option("--alpha", sweep_args.alpha, "rank coefficients, e.g. 1;3 (default 1;1)");
    sweep->add_option("--location-law", sweep_args.location_law,
                      "uniform | two-clusters | endpoints");
    sweep->add_option("--cluster-gap", sweep_args.cluster_gap,
                      "central gap for two-clusters (default 1/2)");
    sweep->add_option("--pref-law", sweep_args.pref_law, "iid | blockwise");
    sweep->add_option("--trials", sweep_args.trials, "trial count (default 100)");
    sweep->add_option("--seed", sweep_args.seed, "master seed (ORDLOC_SEED overrides)");
    sweep->add_option("--verify-bound", sweep_args.bound,
                      "fail (exit 4) if any trial's ratio lower bound exceeds this");
    add_oracle_flags(sweep, sweep_args.oracle_flags);

    ReplayArgs replay_args;
    CLI::App* replay_cmd = app.add_subcommand("replay", "re-check a cataloged reference instance");
    add_instance_flags(replay_cmd, replay_args.inst);
    replay_cmd->add_option("--mech", replay_args.mech, "also run this mechanism on it");
    add_oracle_flags(replay_cmd, replay_args.oracle_flags);

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "list the reference instances");

    Reporter rep;
    for (CLI::App* cmd : {eval, run, opt, audit, sweep, replay_cmd, catalog_cmd}) {
        cmd->add_option("--csv", rep.csv_path, "write CSV rows to this path");
        cmd->add_option("--json", rep.json_path, "write a structured report to this path");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        int code = 0;
        if (eval->parsed())
            code = run_eval(eval_args, rep);
        else if (run->parsed())
            code = run_run(run_args, rep);
        else if (opt->parsed())
            code = run_opt(opt_args, rep);
        else if (audit->parsed())
            code = run_audit(audit_args, rep);
        else if (sweep->parsed())
            code = run_sweep(sweep_args, rep);
        else if (replay_cmd->parsed())
            code = run_replay(replay_args, rep);
        else if (catalog_cmd->parsed())
            code = run_catalog(rep);
        return rep.finish(code);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
