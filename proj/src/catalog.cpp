#include "ordloc/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordloc/oracles.hpp"

namespace ordloc {

namespace {

const std::vector<int> kF1{0, 1};  // prefers facility 1
const std::vector<int> kF2{1, 0};  // prefers facility 2

Instance make2(const Rat& alpha, std::vector<Rat> xs, std::vector<std::vector<int>> prefs) {
    std::vector<Agent> agents;
    for (std::size_t i = 0; i < xs.size(); ++i)
        agents.push_back(Agent{std::move(xs[i]), std::move(prefs[i])});
    return Instance::make(ModelKind::Multiplicative, {Rat(1), alpha}, std::move(agents));
}

[[noreturn]] void invalid(const std::string& id, const std::string& why) {
    throw std::invalid_argument(id + ": " + why);
}

void require(bool ok, const std::string& id, const std::string& why) {
    if (!ok) invalid(id, why);
}

void verify_checks(PaperInstance& pi) {
    for (const ReferenceCheck& c : pi.checks) {
        Rat got = evaluate_candidate(check_instance(pi, c), c.placement, c.objective);
        if (got != c.value)
            invalid(pi.id, "reference check '" + c.label + "' evaluates to " +
                               rat_to_string(got) + ", expected " + rat_to_string(c.value) +
                               " (epsilon too large for this alpha?)");
    }
}

PaperInstance build_sec2(const Rat& alpha) {
    require(alpha == 3, "sec2", "fixed evaluation example requires alpha = 3");
    PaperInstance pi;
    pi.id = "sec2";
    pi.description = "three agents at 0, 2/5, 1; middle agent prefers facility 2; "
                     "evaluated at (1/5, 4/5)";
    pi.instance = make2(alpha, {Rat(0), Rat(2, 5), Rat(1)}, {kF1, kF2, kF1});
    pi.checks.push_back({"max cost at (1/5, 4/5)", std::nullopt,
                         {Rat(1, 5), Rat(4, 5)}, Objective::MaxCost, Rat(3, 5), false});
    pi.checks.push_back({"total cost at (1/5, 4/5)", std::nullopt,
                         {Rat(1, 5), Rat(4, 5)}, Objective::TotalCost, Rat(6, 5), false});
    return pi;
}

PaperInstance build_t32(const Rat& alpha, const Rat& eps, bool total_cost_variant) {
    const std::string id = total_cost_variant ? "t3.5" : "t3.2";
    require(alpha >= 1, id, "requires alpha >= 1");
    require(eps > 0 && eps < Rat(1, 4), id, "requires 0 < epsilon < 1/4");
    PaperInstance pi;
    pi.id = id;
    pi.instance = make2(alpha, {Rat(0), eps, Rat(1) - eps, Rat(1)}, {kF1, kF1, kF2, kF2});
    pi.parameters = {{"epsilon", eps}};
    if (total_cost_variant) {
        pi.description = "edge pairs at 0/eps and (1-eps)/1 with split preferences; "
                         "total cost 2*eps at (0, 1)";
        pi.checks.push_back({"total cost optimum", std::nullopt, {Rat(0), Rat(1)},
                             Objective::TotalCost, Rat(2) * eps});
    } else {
        pi.description = "edge pairs at 0/eps and (1-eps)/1 with split preferences; "
                         "max cost eps/2 at (eps/2, 1-eps/2)";
        pi.checks.push_back({"max cost optimum", std::nullopt,
                             {eps / 2, Rat(1) - eps / 2}, Objective::MaxCost, eps / 2});
    }
    pi.deviation = ProofDeviation{1, kF2, std::nullopt};
    verify_checks(pi);
    return pi;
}

PaperInstance build_t37(const Rat& alpha) {
    require(alpha > 1 && alpha < 2, "t3.7", "requires 1 < alpha < 2");
    Rat x0 = Rat(1) - 1 / alpha;
    PaperInstance pi;
    pi.id = "t3.7";
    pi.description = "two agents at 0, one at 1-1/alpha, one at 1; min-utility anchors "
                     "1 - x/2 (base ranking) and 1/alpha (first agent flipped)";
    pi.instance = make2(alpha, {Rat(0), Rat(0), x0, Rat(1)}, {kF1, kF1, kF1, kF2});
    pi.parameters = {{"x", x0}};
    pi.checks.push_back({"min utility, base profile", std::nullopt, {x0 / 2, Rat(1)},
                         Objective::MinUtility, Rat(1) - x0 / 2});
    pi.checks.push_back({"min utility, first agent flipped",
                         std::vector<std::vector<int>>{kF2, kF1, kF1, kF2},
                         {Rat(0), Rat(1)}, Objective::MinUtility, 1 / alpha});
    pi.deviation = ProofDeviation{0, kF2, std::nullopt};
    verify_checks(pi);
    return pi;
}

PaperInstance build_t39(const Rat& alpha) {
    require(alpha >= 1, "t3.9", "requires alpha >= 1");
    Rat s = 1 / (3 * (alpha + 1));
    PaperInstance pi;
    pi.id = "t3.9";
    pi.description = "agents at 0, s, 2s, 3s, 1, 1 with s = 1/(3(alpha+1)); total utility "
                     "5 - 2s + (1-2s)/alpha at (2s, 1)";
    pi.instance = make2(alpha, {Rat(0), s, 2 * s, 3 * s, Rat(1), Rat(1)},
                        {kF2, kF1, kF1, kF1, kF2, kF2});
    pi.parameters = {{"s", s}};
    pi.checks.push_back({"total utility optimum", std::nullopt, {2 * s, Rat(1)},
                         Objective::TotalUtility,
                         Rat(5) - 2 * s + (Rat(1) - 2 * s) / alpha});
    pi.deviation = ProofDeviation{3, kF2, std::nullopt};
    verify_checks(pi);
    return pi;
}

PaperInstance build_t43(const Rat& alpha, const Rat& eps, std::optional<std::size_t> n_opt) {
    const std::size_t n = n_opt.value_or(6);
    require(alpha >= 1, "t4.3", "requires alpha >= 1");
    require(n >= 4 && n % 2 == 0, "t4.3", "requires an even n >= 4");
    require(eps > 0 && eps < Rat(1, 4), "t4.3", "requires 0 < epsilon < 1/4");
    PaperInstance pi;
    pi.id = "t4.3";
    pi.description = "one agent at 0, n-2 at eps, one at 1; half prefer each facility; "
                     "total cost eps at (eps, 1)";
    std::vector<Rat> xs(n, eps);
    xs.front() = 0;
    xs.back() = 1;
    std::vector<std::vector<int>> prefs(n, kF1);
    for (std::size_t i = n / 2; i < n; ++i) prefs[i] = kF2;
    pi.instance = make2(alpha, std::move(xs), std::move(prefs));
    pi.parameters = {{"epsilon", eps}};
    pi.checks.push_back({"total cost optimum", std::nullopt, {eps, Rat(1)},
                         Objective::TotalCost, eps});
    verify_checks(pi);
    return pi;
}

PaperInstance build_t46(const Rat& alpha) {
    require(alpha >= 3, "t4.6", "requires alpha >= 3");
    PaperInstance pi;
    pi.id = "t4.6";
    pi.description = "agents at 0, 1/2, 1; the middle one prefers facility 2; "
                     "min utility 1/2 at (1/2, 1/2)";
    pi.instance = make2(alpha, {Rat(0), Rat(1, 2), Rat(1)}, {kF1, kF2, kF1});
    pi.checks.push_back({"min utility optimum", std::nullopt, {Rat(1, 2), Rat(1, 2)},
                         Objective::MinUtility, Rat(1, 2)});
    verify_checks(pi);
    return pi;
}

PaperInstance build_t47(const Rat& alpha) {
    require(alpha >= 1 && alpha < 3, "t4.7", "requires 1 <= alpha < 3");
    PaperInstance pi;
    pi.id = "t4.7";
    pi.description = "agents at 0, 1/2, 1; the right one prefers facility 2; "
                     "min utility 3/4 at (1/4, 1)";
    pi.instance = make2(alpha, {Rat(0), Rat(1, 2), Rat(1)}, {kF1, kF1, kF2});
    pi.checks.push_back({"min utility optimum", std::nullopt, {Rat(1, 4), Rat(1)},
                         Objective::MinUtility, Rat(3, 4)});
    verify_checks(pi);
    return pi;
}

PaperInstance build_t48(const Rat& alpha, const Rat& eps) {
    require(alpha > 1, "t4.8", "requires alpha > 1");
    Rat t = std::min(Rat(1 / (3 * alpha)), Rat(Rat(1) - 1 / alpha));
    require(eps < t, "t4.8", "requires epsilon < min(1/(3 alpha), 1 - 1/alpha)");
    Rat tp = t - eps;
    PaperInstance pi;
    pi.id = "t4.8";
    pi.description = "agents at 0, t', 1-t', 1 all preferring facility 1; total utility "
                     "2 - t' + (2-t')/alpha at (0, 1)";
    pi.instance = make2(alpha, {Rat(0), tp, Rat(1) - tp, Rat(1)}, {kF1, kF1, kF1, kF1});
    pi.parameters = {{"t", t}, {"t_prime", tp}, {"epsilon", eps}};
    pi.checks.push_back({"total utility optimum", std::nullopt, {Rat(0), Rat(1)},
                         Objective::TotalUtility,
                         Rat(2) - tp + (Rat(2) - tp) / alpha});
    pi.deviation = ProofDeviation{2, std::nullopt, Rat(1)};
    verify_checks(pi);
    return pi;
}

PaperInstance build_ex1(const Rat& alpha) {
    require(alpha >= 1, "ex1", "requires alpha >= 1");
    PaperInstance pi;
    pi.id = "ex1";
    pi.description = "three agents at 0 and one at 1, only the first prefers facility 1; "
                     "per-group medians pay total cost 1 while (0, 1) is free";
    pi.instance = make2(alpha, {Rat(0), Rat(0), Rat(0), Rat(1)}, {kF1, kF2, kF2, kF2});
    pi.checks.push_back({"total cost optimum", std::nullopt, {Rat(0), Rat(1)},
                         Objective::TotalCost, Rat(0)});
    verify_checks(pi);
    return pi;
}

}  // namespace

Instance check_instance(const PaperInstance& pi, const ReferenceCheck& check) {
    if (!check.pref_override) return pi.instance;
    std::vector<Agent> agents = pi.instance.agents;
    if (check.pref_override->size() != agents.size())
        throw std::invalid_argument(pi.id + ": pref override size mismatch");
    for (std::size_t i = 0; i < agents.size(); ++i) agents[i].pref = (*check.pref_override)[i];
    return Instance::make(pi.instance.model, pi.instance.alpha, std::move(agents));
}

std::vector<CatalogEntryInfo> catalog() {
    return {
        {"sec2", "three agents, fixed evaluation at (1/5, 4/5)", "alpha = 3", false, false},
        {"t3.2", "edge pairs, max-cost anchor eps/2", "alpha >= 1", true, false},
        {"t3.5", "edge pairs, total-cost anchor 2*eps", "alpha >= 1", true, false},
        {"t3.7", "duplicate left pair, min-utility anchors 1-x/2 and 1/alpha",
         "1 < alpha < 2", false, false},
        {"t3.9", "four left and two right agents, total-utility anchor", "alpha >= 1",
         false, false},
        {"t4.3", "three-location profile, total-cost anchor eps", "alpha >= 1", true, true},
        {"t4.6", "spread trio, min-utility anchor 1/2", "alpha >= 3", false, false},
        {"t4.7", "spread trio, min-utility anchor 3/4", "1 <= alpha < 3", false, false},
        {"t4.8", "uniform first choice, total-utility anchor", "alpha > 1", true, false},
        {"ex1", "median ratio blow-up profile, optimum 0", "alpha >= 1", false, false},
    };
}

PaperInstance build_catalog_instance(const std::string& id, const Rat& alpha, const Rat& epsilon,
                                     std::optional<std::size_t> n) {
    if (id == "sec2") return build_sec2(alpha);
    if (id == "t3.2") return build_t32(alpha, epsilon, false);
    if (id == "t3.5") return build_t32(alpha, epsilon, true);
    if (id == "t3.7") return build_t37(alpha);
    if (id == "t3.9") return build_t39(alpha);
    if (id == "t4.3") return build_t43(alpha, epsilon, n);
    if (id == "t4.6") return build_t46(alpha);
    if (id == "t4.7") return build_t47(alpha);
    if (id == "t4.8") return build_t48(alpha, epsilon);
    if (id == "ex1") return build_ex1(alpha);
    throw std::invalid_argument("unknown catalog id: '" + id + "'");
}

}  // namespace ordloc
