#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ordloc/generators.hpp"
#include "ordloc/oracles.hpp"
#include "test_util.hpp"

using namespace ordloc;
using namespace ordloc::testutil;

namespace {

// Independent reference for the two-facility total-distance optimum: some
// optimal solution puts both facilities on agent locations (each group's
// median is an input point), so trying every location pair is exhaustive.
Rat brute_total_cost(const std::vector<Rat>& xs) {
    Rat best(-1);
    for (const Rat& y1 : xs)
        for (const Rat& y2 : xs) {
            Rat total = 0;
            for (const Rat& x : xs) total += std::min(rat_abs(x - y1), rat_abs(x - y2));
            if (best < 0 || total < best) best = total;
        }
    return best;
}

// Independent reference for the max-distance optimum: an optimal solution
// centers each facility on its group's extremes, so pair midpoints of agent
// locations exhaust the candidates.
Rat brute_max_cost(const std::vector<Rat>& xs) {
    std::vector<Rat> cand;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i; j < xs.size(); ++j) cand.push_back((xs[i] + xs[j]) / 2);
    Rat best(-1);
    for (const Rat& y1 : cand)
        for (const Rat& y2 : cand) {
            Rat worst = 0;
            for (const Rat& x : xs)
                worst = std::max(worst, Rat(std::min(rat_abs(x - y1), rat_abs(x - y2))));
            if (best < 0 || worst < best) best = worst;
        }
    return best;
}

GeneratorSpec unit_alpha_spec(std::size_t n) {
    GeneratorSpec spec;
    spec.n = n;
    spec.alpha = {Rat(1), Rat(1)};
    spec.seed = 20260814;
    return spec;
}

}  // namespace

TEST_CASE("exact split oracle matches brute force on fuzzed profiles") {
    for (std::uint64_t t = 0; t < 30; ++t) {
        GeneratorSpec spec = unit_alpha_spec(2 + t % 5);
        std::vector<Rat> xs = generate(spec, t).locations();
        CAPTURE(t);
        CHECK(exact_optimum_gamma1(xs, Objective::TotalCost).value == brute_total_cost(xs));
        CHECK(exact_optimum_gamma1(xs, Objective::MaxCost).value == brute_max_cost(xs));
    }
}

TEST_CASE("utility objectives are complements of the cost objectives") {
    std::vector<Rat> xs{Rat(0), Rat(1, 10), Rat(2, 5), Rat(1)};
    OracleResult tc = exact_optimum_gamma1(xs, Objective::TotalCost);
    OracleResult tu = exact_optimum_gamma1(xs, Objective::TotalUtility);
    CHECK(tu.value == Rat(4) - tc.value);
    CHECK(tu.placement == tc.placement);
    OracleResult mc = exact_optimum_gamma1(xs, Objective::MaxCost);
    OracleResult mu = exact_optimum_gamma1(xs, Objective::MinUtility);
    CHECK(mu.value == Rat(1) - mc.value);
    CHECK(mu.placement == mc.placement);
}

TEST_CASE("exact oracle handles a single agent") {
    OracleResult r = exact_optimum_gamma1({Rat(1, 3)}, Objective::TotalCost);
    CHECK(r.value == Rat(0));
    CHECK(r.placement == Placement{Rat(1, 3), Rat(1, 3)});
    CHECK(r.exact);
    CHECK(r.error_bound == Rat(0));
    CHECK(exact_optimum_gamma1({Rat(1, 3)}, Objective::MinUtility).value == Rat(1));
    CHECK_THROWS_AS(exact_optimum_gamma1({}, Objective::TotalCost), std::invalid_argument);
    CHECK_THROWS_AS(exact_optimum_gamma1({Rat(2)}, Objective::TotalCost),
                    std::invalid_argument);
}

TEST_CASE("grid value stays within its certificate of the exact optimum") {
    // refine_rounds = 0: the unrefined certificate (half-step sensitivity over
    // the full grid) is the one with an unconditional containment guarantee
    OracleConfig coarse;
    coarse.grid_cells = 50;
    coarse.refine_rounds = 0;
    OracleConfig fine = coarse;
    fine.refine_rounds = 1;
    for (std::uint64_t t = 0; t < 20; ++t) {
        GeneratorSpec spec = unit_alpha_spec(3 + t % 6);
        Instance inst = generate(spec, 100 + t);
        for (Objective obj : {Objective::TotalCost, Objective::MinUtility}) {
            OracleResult exact = exact_optimum_gamma1(inst.locations(), obj);
            OracleResult grid = grid_optimum(inst, obj, coarse);
            CAPTURE(t);
            CHECK(rat_abs(grid.value - exact.value) <= grid.error_bound);
            // the reported value is the exact objective at the reported point
            CHECK(grid.value == evaluate_candidate(inst, grid.placement, obj));
            // grid points can only be worse than the true optimum, and local
            // refinement can only improve on the coarse incumbent
            OracleResult refined = grid_optimum(inst, obj, fine);
            if (is_cost_objective(obj)) {
                CHECK(grid.value >= exact.value);
                CHECK(refined.value <= grid.value);
            } else {
                CHECK(grid.value <= exact.value);
                CHECK(refined.value >= grid.value);
            }
        }
    }
}

TEST_CASE("refinement shrinks the certificate by exactly the refine factor") {
    Instance inst = walkthrough();
    OracleConfig cfg;
    cfg.grid_cells = 100;
    Rat prev;
    for (int rounds = 0; rounds <= 2; ++rounds) {
        cfg.refine_rounds = rounds;
        OracleResult r = grid_optimum(inst, Objective::TotalCost, cfg);
        Rat expected_step = Rat(1, 100) / (rounds == 0 ? 1 : (rounds == 1 ? 10 : 100));
        CHECK(r.error_bound == certificate_bound(inst, Objective::TotalCost, expected_step));
        if (rounds > 0) CHECK(prev == r.error_bound * 10);
        prev = r.error_bound;
    }
}

TEST_CASE("certificate bound scales with the model, objective and agent count") {
    Instance inst = walkthrough();  // n = 3, alpha_m = 3, multiplicative
    Rat step(1, 100);
    CHECK(certificate_bound(inst, Objective::MaxCost, step) == Rat(3, 200));
    CHECK(certificate_bound(inst, Objective::TotalCost, step) == Rat(9, 200));
    CHECK(certificate_bound(inst, Objective::MinUtility, step) == Rat(1, 200));
    CHECK(certificate_bound(inst, Objective::TotalUtility, step) == Rat(3, 200));
}

TEST_CASE("grid ties resolve to the lexicographically smallest point") {
    Instance inst = mult2(Rat(1), {Rat(1, 2), Rat(1, 2), Rat(1, 2)}, {F1, F1, F2});
    OracleConfig cfg;
    cfg.grid_cells = 10;
    cfg.refine_rounds = 0;
    OracleResult r = grid_optimum(inst, Objective::TotalCost, cfg);
    CHECK(r.value == Rat(0));
    CHECK(r.placement == Placement{Rat(0), Rat(1, 2)});
}

TEST_CASE("grid result is independent of agent order") {
    GeneratorSpec spec = unit_alpha_spec(7);
    spec.alpha = {Rat(1), Rat(5, 2)};
    Instance inst = generate(spec, 3);
    Instance reversed = inst;
    std::reverse(reversed.agents.begin(), reversed.agents.end());
    OracleConfig cfg;
    cfg.grid_cells = 40;
    cfg.refine_rounds = 1;
    for (Objective obj : {Objective::TotalCost, Objective::TotalUtility}) {
        OracleResult a = grid_optimum(inst, obj, cfg);
        OracleResult b = grid_optimum(reversed, obj, cfg);
        CHECK(a.value == b.value);
        CHECK(a.placement == b.placement);
    }
}

TEST_CASE("grid oracle rejects bad configurations and oversized budgets") {
    Instance inst = walkthrough();
    OracleConfig cfg;
    cfg.grid_cells = 20000;  // 20000^2 = 4e8 > 1e8
    CHECK_THROWS_AS(grid_optimum(inst, Objective::TotalCost, cfg), std::invalid_argument);
    cfg.grid_cells = 0;
    CHECK_THROWS_AS(grid_optimum(inst, Objective::TotalCost, cfg), std::invalid_argument);
    cfg = OracleConfig{};
    cfg.refine_factor = 1;
    CHECK_THROWS_AS(grid_optimum(inst, Objective::TotalCost, cfg), std::invalid_argument);
    cfg = OracleConfig{};
    cfg.refine_rounds = -1;
    CHECK_THROWS_AS(grid_optimum(inst, Objective::TotalCost, cfg), std::invalid_argument);
}
