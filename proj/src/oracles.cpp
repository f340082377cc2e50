#include "ordloc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace ordloc {

namespace {

struct SplitCosts {
    Rat value;
    Rat left, right;  // facility coordinates
};

// Sum of |x - median| over a sorted slice [l, r], via prefix sums.
Rat part_median_cost(const std::vector<Rat>& xs, const std::vector<Rat>& prefix,
                     std::size_t l, std::size_t r) {
    std::size_t mid = l + (r - l) / 2;  // lower median
    Rat left_part = xs[mid] * static_cast<long>(mid - l + 1) - (prefix[mid + 1] - prefix[l]);
    Rat right_part = (prefix[r + 1] - prefix[mid + 1]) - xs[mid] * static_cast<long>(r - mid);
    return left_part + right_part;
}

SplitCosts best_total_cost_split(const std::vector<Rat>& xs) {
    const std::size_t n = xs.size();
    std::vector<Rat> prefix(n + 1, Rat(0));
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + xs[i];

    std::optional<SplitCosts> best;
    for (std::size_t i = 1; i < n; ++i) {
        Rat value = part_median_cost(xs, prefix, 0, i - 1) + part_median_cost(xs, prefix, i, n - 1);
        if (!best || value < best->value)
            best = SplitCosts{value, xs[(i - 1) / 2], xs[i + (n - i - 1) / 2]};
    }
    return *best;
}

SplitCosts best_max_cost_split(const std::vector<Rat>& xs) {
    const std::size_t n = xs.size();
    std::optional<SplitCosts> best;
    for (std::size_t i = 1; i < n; ++i) {
        Rat left_half = (xs[i - 1] - xs[0]) / 2;
        Rat right_half = (xs[n - 1] - xs[i]) / 2;
        Rat value = std::max(left_half, right_half);
        if (!best || value < best->value)
            best = SplitCosts{value, (xs[0] + xs[i - 1]) / 2, (xs[i] + xs[n - 1]) / 2};
    }
    return *best;
}

bool is_utility(Objective obj) { return !is_cost_objective(obj); }

// ---- grid search ----------------------------------------------------------

struct FloatTables {
    // contribution[j] is an n x (G+1) row-major table: the cost or utility
    // agent i derives from facility j sitting at k/G.
    std::vector<std::vector<double>> contribution;
    std::size_t points_per_axis = 0;
};

FloatTables build_tables(const Instance& inst, Objective obj, long G) {
    const std::size_t n = inst.agent_count(), m = inst.facility_count();
    const bool utility = is_utility(obj);
    const bool mult = inst.model == ModelKind::Multiplicative;

    // rank coefficient of facility j in agent i's ranking
    std::vector<std::vector<double>> coef(n, std::vector<double>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k)
            coef[i][inst.agents[i].pref[k]] = rat_to_double(inst.alpha[k]);

    FloatTables t;
    t.points_per_axis = static_cast<std::size_t>(G) + 1;
    t.contribution.assign(m, std::vector<double>(n * t.points_per_axis));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            double x = rat_to_double(inst.agents[i].x);
            double* row = t.contribution[j].data() + i * t.points_per_axis;
            for (std::size_t k = 0; k < t.points_per_axis; ++k) {
                double d = std::fabs(x - static_cast<double>(k) / static_cast<double>(G));
                double c = coef[i][j];
                if (mult)
                    row[k] = utility ? (1.0 - d) / c : c * d;
                else
                    row[k] = utility ? 1.0 - d - c : d + c;
            }
        }
    }
    return t;
}

// Calls visit(ks, f) for every grid tuple in lexicographic order, where f is
// the float objective value. Specialized two-facility loop; generic odometer
// otherwise.
template <typename Visit>
void scan_grid(const FloatTables& t, const Instance& inst, Objective obj, Visit&& visit) {
    const std::size_t n = inst.agent_count(), m = inst.facility_count();
    const std::size_t P = t.points_per_axis;
    const bool utility = is_utility(obj);
    const bool total = obj == Objective::TotalCost || obj == Objective::TotalUtility;

    if (m == 2) {
        const std::vector<double>&A = t.contribution[0], &B = t.contribution[1];
        std::vector<std::size_t> ks(2);
        for (std::size_t k1 = 0; k1 < P; ++k1) {
            ks[0] = k1;
            for (std::size_t k2 = 0; k2 < P; ++k2) {
                double agg = total ? 0.0
                                   : (utility ? std::numeric_limits<double>::infinity()
                                              : -std::numeric_limits<double>::infinity());
                for (std::size_t i = 0; i < n; ++i) {
                    double a = A[i * P + k1], b = B[i * P + k2];
                    double v = utility ? std::max(a, b) : std::min(a, b);
                    if (total)
                        agg += v;
                    else
                        agg = utility ? std::min(agg, v) : std::max(agg, v);
                }
                ks[1] = k2;
                visit(ks, agg);
            }
        }
        return;
    }

    std::vector<std::size_t> ks(m, 0);
    while (true) {
        double agg = total ? 0.0
                           : (utility ? std::numeric_limits<double>::infinity()
                                      : -std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < n; ++i) {
            double v = t.contribution[0][i * P + ks[0]];
            for (std::size_t j = 1; j < m; ++j) {
                double c = t.contribution[j][i * P + ks[j]];
                v = utility ? std::max(v, c) : std::min(v, c);
            }
            if (total)
                agg += v;
            else
                agg = utility ? std::min(agg, v) : std::max(agg, v);
        }
        visit(ks, agg);
        std::size_t dim = m;
        while (dim > 0 && ks[dim - 1] == P - 1) ks[--dim] = 0;
        if (dim == 0) break;
        ++ks[dim - 1];
    }
}

void check_config(const OracleConfig& cfg) {
    if (cfg.grid_cells < 1) throw std::invalid_argument("grid_cells must be >= 1");
    if (cfg.refine_rounds < 0) throw std::invalid_argument("refine_rounds must be >= 0");
    if (cfg.refine_factor < 2) throw std::invalid_argument("refine_factor must be >= 2");
}

void check_budget(long G, std::size_t m) {
    unsigned long long budget = 1;
    for (std::size_t j = 0; j < m; ++j) {
        budget *= static_cast<unsigned long long>(G);
        if (budget > 100000000ULL)
            throw std::invalid_argument("grid budget exceeded: G^m > 1e8");
    }
}

// ---- refinement regions ----------------------------------------------------
// A candidate region is stored row-wise: the first m-1 coordinates key a row,
// the last axis is run-length encoded as inclusive [lo, hi] intervals. Keys
// order lexicographically, so iterating a Rows walks the region in the same
// order scan_grid walks the full grid.

using Runs = std::vector<std::pair<long, long>>;
using Rows = std::map<std::vector<long>, Runs>;

void append_run(Runs& runs, long lo, long hi) {
    if (!runs.empty() && lo <= runs.back().second + 1)
        runs.back().second = std::max(runs.back().second, hi);
    else
        runs.emplace_back(lo, hi);
}

void merge_runs(Runs& runs) {
    std::sort(runs.begin(), runs.end());
    Runs merged;
    for (const auto& [lo, hi] : runs) append_run(merged, lo, hi);
    runs = std::move(merged);
}

}  // namespace

Rat certificate_bound(const Instance& inst, Objective obj, const Rat& step) {
    Rat per_agent = step / 2;
    if (is_cost_objective(obj) && inst.model == ModelKind::Multiplicative)
        per_agent *= inst.alpha.back();
    if (obj == Objective::TotalCost || obj == Objective::TotalUtility)
        per_agent *= static_cast<long>(inst.agent_count());
    return per_agent;
}

OracleResult exact_optimum_gamma1(const std::vector<Rat>& locations, Objective obj) {
    if (locations.empty()) throw std::invalid_argument("no locations");
    for (const Rat& x : locations)
        if (x < 0 || x > 1) throw std::invalid_argument("location outside [0,1]");

    std::vector<Rat> xs = locations;
    std::sort(xs.begin(), xs.end());
    const long n = static_cast<long>(xs.size());

    SplitCosts split;
    if (n == 1)
        split = SplitCosts{Rat(0), xs[0], xs[0]};
    else if (obj == Objective::TotalCost || obj == Objective::TotalUtility)
        split = best_total_cost_split(xs);
    else
        split = best_max_cost_split(xs);

    OracleResult res;
    res.placement = {split.left, split.right};
    res.exact = true;
    res.error_bound = 0;
    switch (obj) {
        case Objective::TotalCost: res.value = split.value; break;
        case Objective::MaxCost: res.value = split.value; break;
        case Objective::TotalUtility: res.value = Rat(n) - split.value; break;
        case Objective::MinUtility: res.value = Rat(1) - split.value; break;
    }
    return res;
}

Rat evaluate_candidate(const Instance& inst, const Placement& y, Objective obj) {
    return objective_value(inst, y, obj);
}

OracleResult grid_optimum(const Instance& inst, Objective obj, const OracleConfig& cfg) {
    check_config(cfg);
    const std::size_t m = inst.facility_count();
    const long G = cfg.grid_cells;
    check_budget(G, m);

    const bool utility = is_utility(obj);
    const bool mult = inst.model == ModelKind::Multiplicative;
    const bool total = obj == Objective::TotalCost || obj == Objective::TotalUtility;
    const std::size_t n = inst.agent_count();
    const double alpha_top = rat_to_double(inst.alpha.back());
    const double slack = 1e-9 * (1.0 + static_cast<double>(n) * std::max(1.0, alpha_top));
    const double kInf = std::numeric_limits<double>::infinity();

    // exact and float views of each agent's rank coefficient per facility
    std::vector<std::vector<const Rat*>> coef(n, std::vector<const Rat*>(m));
    std::vector<std::vector<double>> fcoef(n, std::vector<double>(m));
    std::vector<double> xf(n);
    for (std::size_t i = 0; i < n; ++i) {
        xf[i] = rat_to_double(inst.agents[i].x);
        for (std::size_t k = 0; k < m; ++k) {
            coef[i][inst.agents[i].pref[k]] = &inst.alpha[k];
            fcoef[i][inst.agents[i].pref[k]] = rat_to_double(inst.alpha[k]);
        }
    }
    auto fcontrib = [&](std::size_t i, std::size_t j, double d) {
        double c = fcoef[i][j];
        if (mult) return utility ? (1.0 - d) / c : c * d;
        return utility ? 1.0 - d - c : d + c;
    };

    FloatTables tables = build_tables(inst, obj, G);

    // Pass 1: float extremum over the whole grid.
    double screen = utility ? -kInf : kInf;
    scan_grid(tables, inst, obj, [&](const std::vector<std::size_t>&, double f) {
        screen = utility ? std::max(screen, f) : std::min(screen, f);
    });

    // Pass 2: every point whose float value is within the screening slack is
    // confirmed exactly; the float error is orders of magnitude below slack,
    // so the exact optimizer set is always shortlisted. Exact contributions
    // are cached per axis point: plateaus of exact ties can shortlist
    // thousands of candidates, and re-deriving each |x - k/G| from scratch
    // would dominate the runtime. The same scan collects the refinement
    // frontier: every point within one certificate of the screen value. The
    // grid point nearest the true optimizer is always in that set, so
    // refining around all of it (rather than the incumbent alone) is what
    // makes the shrunken certificate sound.
    std::vector<std::vector<std::vector<Rat>>> columns(
        m, std::vector<std::vector<Rat>>(tables.points_per_axis));
    auto column = [&](std::size_t j, std::size_t k) -> const std::vector<Rat>& {
        std::vector<Rat>& col = columns[j][k];
        if (col.empty()) {
            col.reserve(n);
            const Rat v = make_rat(static_cast<long>(k), G);
            for (std::size_t i = 0; i < n; ++i) {
                Rat d = rat_abs(inst.agents[i].x - v);
                const Rat& c = *coef[i][j];
                if (mult)
                    col.push_back(utility ? Rat((1 - d) / c) : Rat(c * d));
                else
                    col.push_back(utility ? Rat(1 - d - c) : Rat(d + c));
            }
        }
        return col;
    };

    const Rat step0(1, G);
    const bool want_frontier = cfg.refine_rounds > 0;
    const double fthr0 =
        want_frontier ? rat_to_double(certificate_bound(inst, obj, step0)) + slack : 0.0;
    Rows frontier;
    std::vector<long> row_key(m - 1, -1);
    Runs* row_runs = nullptr;

    std::optional<Rat> best;
    std::vector<long> best_coords;
    std::vector<const std::vector<Rat>*> cols(m);
    scan_grid(tables, inst, obj, [&](const std::vector<std::size_t>& ks, double f) {
        if (want_frontier && (utility ? f >= screen - fthr0 : f <= screen + fthr0)) {
            bool same_row = row_runs != nullptr;
            for (std::size_t j = 0; same_row && j + 1 < m; ++j)
                same_row = row_key[j] == static_cast<long>(ks[j]);
            if (!same_row) {
                for (std::size_t j = 0; j + 1 < m; ++j) row_key[j] = static_cast<long>(ks[j]);
                row_runs = &frontier[row_key];
            }
            append_run(*row_runs, static_cast<long>(ks[m - 1]), static_cast<long>(ks[m - 1]));
        }
        if (utility ? (f < screen - slack) : (f > screen + slack)) return;
        for (std::size_t j = 0; j < m; ++j) cols[j] = &column(j, ks[j]);
        Rat agg;
        for (std::size_t i = 0; i < n; ++i) {
            const Rat* v = &(*cols[0])[i];
            for (std::size_t j = 1; j < m; ++j) {
                const Rat& c = (*cols[j])[i];
                if (utility ? c > *v : c < *v) v = &c;
            }
            if (total)
                agg += *v;
            else if (i == 0 || (utility ? *v < agg : *v > agg))
                agg = *v;
        }
        if (!best || (utility ? agg > *best : agg < *best)) {
            best = std::move(agg);
            best_coords.assign(ks.begin(), ks.end());
        }
    });

    long res_G = G;
    Rat step = step0;
    constexpr long kMaxResolution = 1'000'000'000'000L;

    for (int round = 0; round < cfg.refine_rounds; ++round) {
        if (res_G > kMaxResolution / cfg.refine_factor)
            throw std::invalid_argument("refined grid step below 1e-12 is unsupported");
        const long fac = cfg.refine_factor;
        const long fine_G = res_G * fac;
        const Rat fine_step = step / cfg.refine_factor;

        // Region: the +-step boxes around every frontier point, on the fine
        // grid. Overlapping boxes collapse in the row encoding.
        Rows region;
        for (const auto& [prefix, runs] : frontier) {
            std::vector<long> off(m - 1, -fac);
            while (true) {
                std::vector<long> q(m - 1);
                for (std::size_t d = 0; d + 1 < m; ++d)
                    q[d] = std::clamp(prefix[d] * fac + off[d], 0L, fine_G);
                Runs& target = region[q];
                for (const auto& [lo, hi] : runs)
                    target.emplace_back(std::clamp(lo * fac - fac, 0L, fine_G),
                                        std::clamp(hi * fac + fac, 0L, fine_G));
                std::size_t d = m - 1;
                while (d > 0 && off[d - 1] == fac) off[--d] = -fac;
                if (d == 0) break;
                ++off[d - 1];
            }
        }
        for (auto& row : region) merge_runs(row.second);

        // Lazy per-axis exact contribution columns at this resolution.
        std::vector<std::unordered_map<long, std::vector<Rat>>> fine_ecols(m);
        auto fine_ecol = [&](std::size_t j, long c) -> const std::vector<Rat>& {
            auto it = fine_ecols[j].find(c);
            if (it != fine_ecols[j].end()) return it->second;
            std::vector<Rat> col;
            col.reserve(n);
            const Rat y = make_rat(c, fine_G);
            for (std::size_t i = 0; i < n; ++i) {
                Rat d = rat_abs(inst.agents[i].x - y);
                const Rat& c2 = *coef[i][j];
                if (mult)
                    col.push_back(utility ? Rat((1 - d) / c2) : Rat(c2 * d));
                else
                    col.push_back(utility ? Rat(1 - d - c2) : Rat(d + c2));
            }
            return fine_ecols[j].emplace(c, std::move(col)).first->second;
        };

        // Float value at last-axis coordinate c given the aggregated prefix
        // contributions pv. With one facility pv is the +-inf identity.
        auto feval = [&](const std::vector<double>& pv, long c) {
            const double y = static_cast<double>(c) / static_cast<double>(fine_G);
            double agg = total ? 0.0 : (utility ? kInf : -kInf);
            for (std::size_t i = 0; i < n; ++i) {
                double ci = fcontrib(i, m - 1, std::fabs(xf[i] - y));
                double v = utility ? std::max(pv[i], ci) : std::min(pv[i], ci);
                if (total)
                    agg += v;
                else
                    agg = utility ? std::min(agg, v) : std::max(agg, v);
            }
            return agg;
        };

        // Walks the region in lexicographic order and reports it in pieces.
        // On a stretch of the last axis with no agent position strictly
        // inside, each agent's term is min/max(row constant, linear), so for
        // sum objectives the row value is concave (cost) or convex (utility)
        // there: its optimum sits at a stretch endpoint and any threshold
        // band meets the stretch in at most two end intervals. Such
        // stretches go to on_stretch whole. For min/max objectives a stretch
        // is reported as one constant block when the last facility provably
        // cannot matter on it for any agent, and point by point otherwise.
        auto traverse = [&](auto&& on_const, auto&& on_point, auto&& on_stretch) {
            std::vector<double> pv(n);
            std::vector<long> cuts;
            for (const auto& [prefix, runs] : region) {
                for (std::size_t i = 0; i < n; ++i) pv[i] = utility ? -kInf : kInf;
                for (std::size_t d = 0; d + 1 < m; ++d) {
                    const double y =
                        static_cast<double>(prefix[d]) / static_cast<double>(fine_G);
                    for (std::size_t i = 0; i < n; ++i) {
                        double ci = fcontrib(i, d, std::fabs(xf[i] - y));
                        pv[i] = utility ? std::max(pv[i], ci) : std::min(pv[i], ci);
                    }
                }
                double const_val = total ? 0.0 : (utility ? kInf : -kInf);
                if (m > 1)
                    for (std::size_t i = 0; i < n; ++i) {
                        if (total)
                            const_val += pv[i];
                        else
                            const_val =
                                utility ? std::min(const_val, pv[i]) : std::max(const_val, pv[i]);
                    }
                for (const auto& [lo, hi] : runs) {
                    cuts.clear();
                    for (std::size_t i = 0; i < n; ++i) {
                        double b = xf[i] * static_cast<double>(fine_G);
                        long c1 = static_cast<long>(std::floor(b));
                        long c2 = static_cast<long>(std::ceil(b));
                        if (c1 > lo && c1 < hi) cuts.push_back(c1);
                        if (c2 > lo && c2 < hi) cuts.push_back(c2);
                    }
                    std::sort(cuts.begin(), cuts.end());
                    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
                    long a = lo;
                    for (std::size_t s = 0; s <= cuts.size(); ++s) {
                        const long b_end = s < cuts.size() ? cuts[s] : hi;
                        if (total) {
                            on_stretch(prefix, pv, a, b_end);
                            a = b_end;
                            continue;
                        }
                        bool dominated = m > 1;
                        const double ya = static_cast<double>(a) / static_cast<double>(fine_G);
                        const double yb =
                            static_cast<double>(b_end) / static_cast<double>(fine_G);
                        for (std::size_t i = 0; dominated && i < n; ++i) {
                            double dmin =
                                xf[i] < ya ? ya - xf[i] : (xf[i] > yb ? xf[i] - yb : 0.0);
                            double reach = fcontrib(i, m - 1, dmin);
                            dominated = utility ? pv[i] >= reach + slack : pv[i] <= reach - slack;
                        }
                        if (dominated) {
                            on_const(prefix, a, b_end, const_val);
                        } else {
                            for (long c = a; c <= b_end; ++c) on_point(prefix, c, feval(pv, c));
                        }
                        a = b_end;
                    }
                }
            }
        };

        double round_screen = utility ? -kInf : kInf;
        auto relax = [&](double v) {
            round_screen = utility ? std::max(round_screen, v) : std::min(round_screen, v);
        };
        traverse([&](const std::vector<long>&, long, long, double v) { relax(v); },
                 [&](const std::vector<long>&, long, double v) { relax(v); },
                 [&](const std::vector<long>&, const std::vector<double>& pv, long a, long b) {
                     relax(feval(pv, a));
                     if (b != a) relax(feval(pv, b));
                 });

        std::optional<Rat> round_best;
        std::vector<long> round_coords;
        std::vector<const std::vector<Rat>*> ecols_at(m);
        auto confirm = [&](const std::vector<long>& prefix, long c) {
            for (std::size_t d = 0; d + 1 < m; ++d) ecols_at[d] = &fine_ecol(d, prefix[d]);
            ecols_at[m - 1] = &fine_ecol(m - 1, c);
            Rat agg;
            for (std::size_t i = 0; i < n; ++i) {
                const Rat* v = &(*ecols_at[0])[i];
                for (std::size_t j = 1; j < m; ++j) {
                    const Rat& cv = (*ecols_at[j])[i];
                    if (utility ? cv > *v : cv < *v) v = &cv;
                }
                if (total)
                    agg += *v;
                else if (i == 0 || (utility ? *v < agg : *v > agg))
                    agg = *v;
            }
            if (!round_best || (utility ? agg > *round_best : agg < *round_best)) {
                round_best = std::move(agg);
                round_coords.assign(prefix.begin(), prefix.end());
                round_coords.push_back(c);
            }
        };

        const bool more_rounds = round + 1 < cfg.refine_rounds;
        const double fthr =
            more_rounds ? rat_to_double(certificate_bound(inst, obj, fine_step)) + slack : 0.0;
        Rows next_frontier;
        const std::vector<long>* frow = nullptr;
        Runs* fruns = nullptr;
        auto keep = [&](double v, double thr) {
            return utility ? v >= round_screen - thr : v <= round_screen + thr;
        };
        auto emit = [&](const std::vector<long>& prefix, long lo, long hi) {
            if (frow != &prefix) {
                frow = &prefix;
                fruns = &next_frontier[prefix];
            }
            append_run(*fruns, lo, hi);
        };
        traverse(
            [&](const std::vector<long>& prefix, long lo, long hi, double v) {
                if (keep(v, slack)) confirm(prefix, lo);
                if (more_rounds && keep(v, fthr)) emit(prefix, lo, hi);
            },
            [&](const std::vector<long>& prefix, long c, double v) {
                if (keep(v, slack)) confirm(prefix, c);
                if (more_rounds && keep(v, fthr)) emit(prefix, c, c);
            },
            [&](const std::vector<long>& prefix, const std::vector<double>& pv, long a, long b) {
                const double fa = feval(pv, a);
                const double fb = b == a ? fa : feval(pv, b);
                if (keep(fa, slack)) confirm(prefix, a);
                if (b != a && keep(fb, slack)) confirm(prefix, b);
                if (!more_rounds) return;
                const bool qa = keep(fa, fthr);
                const bool qb = keep(fb, fthr);
                if (qa && qb) {
                    emit(prefix, a, b);
                } else if (qa) {
                    long in = a, out = b;
                    while (out - in > 1) {
                        const long mid = in + (out - in) / 2;
                        (keep(feval(pv, mid), fthr) ? in : out) = mid;
                    }
                    emit(prefix, a, std::min(b, in + 1));
                } else if (qb) {
                    long out = a, in = b;
                    while (in - out > 1) {
                        const long mid = out + (in - out) / 2;
                        (keep(feval(pv, mid), fthr) ? in : out) = mid;
                    }
                    emit(prefix, std::max(a, in - 1), b);
                }
                // With neither end in the band, concavity/convexity keeps
                // the whole stretch out of it.
            });

        best = std::move(round_best);
        best_coords = std::move(round_coords);
        frontier = std::move(next_frontier);
        step = fine_step;
        res_G = fine_G;
    }

    OracleResult res;
    res.placement.resize(m);
    for (std::size_t j = 0; j < m; ++j) res.placement[j] = make_rat(best_coords[j], res_G);
    res.value = *best;
    res.error_bound = certificate_bound(inst, obj, step);
    res.exact = false;
    return res;
}

}  // namespace ordloc
