#include "ordloc/audit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ordloc {

namespace {

constexpr std::uint64_t kJointBudget = 10000000;

struct CandidateReport {
    std::vector<int> pref;
    Rat x;
};

Rat welfare(const Instance& truth, std::size_t agent, const Placement& y, WelfareMode mode) {
    return mode == WelfareMode::CostMinimizing ? agent_cost(truth, agent, y)
                                               : agent_utility(truth, agent, y);
}

bool improves(const Rat& before, const Rat& after, WelfareMode mode) {
    return mode == WelfareMode::CostMinimizing ? after < before : after > before;
}

std::vector<Rat> candidate_locations(const Instance& inst, const DeviationSpace& space,
                                     std::size_t agent) {
    std::vector<Rat> xs;
    if (space.candidates.kind == LocationCandidates::Kind::GridPlusSnap) {
        const long G = space.candidates.grid_cells;
        if (G < 1) throw std::invalid_argument("candidate grid must have >= 1 cell");
        for (long k = 0; k <= G; ++k) xs.push_back(make_rat(k, G));
        for (const Agent& a : inst.agents) xs.push_back(a.x);
    } else {
        for (const Rat& v : space.candidates.list) {
            if (v < 0 || v > 1) throw std::invalid_argument("candidate location outside [0,1]");
            xs.push_back(v);
        }
        xs.push_back(inst.agents[agent].x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<std::vector<int>> candidate_rankings(const Instance& inst, const DeviationSpace& space,
                                                 std::size_t agent) {
    if (!space.misreport_prefs) return {inst.agents[agent].pref};
    std::vector<int> perm(inst.facility_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Reports agent `agent` may submit, in audit order: rankings lexicographic,
// locations ascending within each ranking.
std::vector<CandidateReport> candidate_reports(const Instance& inst, const DeviationSpace& space,
                                               std::size_t agent) {
    std::vector<Rat> xs = space.misreport_locations
                              ? candidate_locations(inst, space, agent)
                              : std::vector<Rat>{inst.agents[agent].x};
    std::vector<CandidateReport> out;
    for (const std::vector<int>& pref : candidate_rankings(inst, space, agent))
        for (const Rat& x : xs) out.push_back(CandidateReport{pref, x});
    return out;
}

// Subsets of {0..n-1} with exactly `size` members, lexicographic.
void for_each_subset(std::size_t n, std::size_t size,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    if (size > n) return;
    while (true) {
        fn(pick);
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
}

AuditVerdict search(MechanismId mech, const Instance& inst, const DeviationSpace& space,
                    WelfareMode mode, std::size_t max_group_size, bool guard_budget) {
    if (!space.misreport_prefs && !space.misreport_locations)
        throw std::invalid_argument("deviation space allows no misreports");
    if (max_group_size < 1) throw std::invalid_argument("group size must be >= 1");
    const std::size_t n = inst.agent_count();
    max_group_size = std::min(max_group_size, n);

    std::vector<std::vector<CandidateReport>> reports(n);
    for (std::size_t i = 0; i < n; ++i) reports[i] = candidate_reports(inst, space, i);

    if (guard_budget) {
        std::uint64_t joint = 0;
        for (std::size_t size = 1; size <= max_group_size && joint <= kJointBudget; ++size)
            for_each_subset(n, size, [&](const std::vector<std::size_t>& subset) {
                std::uint64_t prod = 1;
                for (std::size_t a : subset) {
                    prod *= reports[a].size();
                    if (prod > kJointBudget) break;
                }
                joint += prod;
            });
        if (joint > kJointBudget)
            throw std::invalid_argument("joint deviation budget exceeded (> 1e7)");
    }

    Placement truthful = run_mechanism(mech, inst);
    std::vector<Rat> before(n);
    for (std::size_t i = 0; i < n; ++i) before[i] = welfare(inst, i, truthful, mode);

    Instance work = inst;  // patched per deviation, restored afterwards
    AuditVerdict verdict;
    verdict.truthful_placement = truthful;

    for (std::size_t size = 1; size <= max_group_size && !verdict.violation_found; ++size) {
        for_each_subset(n, size, [&](const std::vector<std::size_t>& subset) {
            if (verdict.violation_found) return;
            std::vector<std::size_t> idx(size, 0);
            std::size_t changed_from = 0;  // odometer dims >= this need re-patching
            while (true) {
                for (std::size_t s = changed_from; s < size; ++s) {
                    const CandidateReport& r = reports[subset[s]][idx[s]];
                    work.agents[subset[s]].pref = r.pref;
                    work.agents[subset[s]].x = r.x;
                }
                ++verdict.deviations_examined;

                Placement deviated = run_mechanism(mech, work);
                bool all_improve = true;
                for (std::size_t s = 0; s < size && all_improve; ++s)
                    all_improve = improves(before[subset[s]],
                                           welfare(inst, subset[s], deviated, mode), mode);

                if (all_improve) {
                    verdict.violation_found = true;
                    verdict.deviated_placement = deviated;
                    for (std::size_t s = 0; s < size; ++s) {
                        const std::size_t a = subset[s];
                        MemberReport mr;
                        mr.agent = a;
                        mr.true_x = inst.agents[a].x;
                        mr.true_pref = inst.agents[a].pref;
                        mr.reported_x = work.agents[a].x;
                        mr.reported_pref = work.agents[a].pref;
                        mr.welfare_before = before[a];
                        mr.welfare_after = welfare(inst, a, deviated, mode);
                        verdict.members.push_back(std::move(mr));
                    }
                    break;
                }

                std::size_t dim = size;
                while (dim > 0 && idx[dim - 1] == reports[subset[dim - 1]].size() - 1)
                    idx[--dim] = 0;
                if (dim == 0) break;
                ++idx[dim - 1];
                changed_from = dim - 1;
            }
            for (std::size_t s = 0; s < size; ++s) {
                work.agents[subset[s]].pref = inst.agents[subset[s]].pref;
                work.agents[subset[s]].x = inst.agents[subset[s]].x;
            }
        });
    }
    return verdict;
}

}  // namespace

DeviationSpace DeviationSpace::prefs_only() {
    DeviationSpace s;
    s.misreport_prefs = true;
    return s;
}

DeviationSpace DeviationSpace::locations_only(LocationCandidates c) {
    DeviationSpace s;
    s.misreport_locations = true;
    s.candidates = std::move(c);
    return s;
}

DeviationSpace DeviationSpace::full(LocationCandidates c) {
    DeviationSpace s;
    s.misreport_prefs = true;
    s.misreport_locations = true;
    s.candidates = std::move(c);
    return s;
}

AuditVerdict audit_sp(MechanismId mech, const Instance& inst, const DeviationSpace& space,
                      WelfareMode mode) {
    return search(mech, inst, space, mode, 1, /*guard_budget=*/false);
}

AuditVerdict audit_gsp(MechanismId mech, const Instance& inst, const DeviationSpace& space,
                       WelfareMode mode, std::size_t max_group_size) {
    return search(mech, inst, space, mode, max_group_size, /*guard_budget=*/true);
}

}  // namespace ordloc
