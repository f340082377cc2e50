#include "ordloc/mechanisms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordloc {

namespace {

const Rat kHalf(1, 2);

void require_two_facilities(const Instance& inst, const char* who) {
    if (inst.facility_count() != 2)
        throw std::invalid_argument(std::string(who) + " needs exactly two facilities");
}

// Locations of agents whose top choice is facility j, in input order.
std::vector<Rat> top_choice_group(const Instance& inst, int j) {
    std::vector<Rat> xs;
    for (const Agent& a : inst.agents)
        if (a.pref.front() == j) xs.push_back(a.x);
    return xs;
}

Rat group_extreme_midpoint(const std::vector<Rat>& xs) {
    if (xs.empty()) return kHalf;
    auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    return (*mn + *mx) / 2;
}

Rat group_lower_median(std::vector<Rat> xs) {
    if (xs.empty()) return kHalf;
    return lower_median(std::move(xs));
}

Placement best_split_placement(const Instance& inst) {
    std::vector<Rat> xs = inst.locations();
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    if (n == 1) return {xs[0], xs[0]};

    // total distance with each agent served by the nearer facility
    auto gamma1_total = [&xs](const Rat& y1, const Rat& y2) {
        Rat total = 0;
        for (const Rat& x : xs) total += std::min(rat_abs(x - y1), rat_abs(x - y2));
        return total;
    };

    Placement best;
    Rat best_value;
    for (std::size_t i = 1; i < n; ++i) {
        Rat y1 = xs[(i - 1) / 2];                // lower median of xs[0..i)
        Rat y2 = xs[i + (n - i - 1) / 2];        // lower median of xs[i..n)
        Rat value = gamma1_total(y1, y2);
        if (best.empty() || value < best_value) {
            best = {y1, y2};
            best_value = value;
        }
    }
    return best;
}

}  // namespace

BoundaryStats boundary_stats(const std::vector<Rat>& locations) {
    if (locations.empty()) throw std::invalid_argument("boundary_stats of empty profile");
    BoundaryStats s;
    auto [mn, mx] = std::minmax_element(locations.begin(), locations.end());
    s.lt = *mn;
    s.rt = *mx;
    s.cen = (s.lt + s.rt) / 2;
    s.lb = s.lt;
    s.rb = s.rt;
    for (const Rat& x : locations) {
        if (x <= s.cen && x > s.lb) s.lb = x;
        if (x >= s.cen && x < s.rb) s.rb = x;
    }
    s.dist = std::max(Rat(s.lb - s.lt), Rat(s.rt - s.rb));
    return s;
}

Rat lower_median(std::vector<Rat> values) {
    if (values.empty()) throw std::invalid_argument("median of empty range");
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

Placement run_mechanism(MechanismId mech, const Instance& inst) {
    switch (mech) {
        case MechanismId::Midpoints: {
            require_two_facilities(inst, "midpoints");
            BoundaryStats s = boundary_stats(inst.locations());
            return {(s.lt + s.lb) / 2, (s.rt + s.rb) / 2};
        }
        case MechanismId::PreferredMidpoints: {
            require_two_facilities(inst, "preferred-midpoints");
            return {group_extreme_midpoint(top_choice_group(inst, 0)),
                    group_extreme_midpoint(top_choice_group(inst, 1))};
        }
        case MechanismId::FixedCenter:
            return Placement(inst.facility_count(), kHalf);
        case MechanismId::Extremes: {
            require_two_facilities(inst, "extremes");
            // this is the audit hot path: skip the locations() copy and the
            // unused central statistics
            const Rat* lt = &inst.agents.front().x;
            const Rat* rt = lt;
            for (const Agent& a : inst.agents) {
                if (a.x < *lt) lt = &a.x;
                if (a.x > *rt) rt = &a.x;
            }
            return {*lt, *rt};
        }
        case MechanismId::OptimalSplitTotalCost:
            require_two_facilities(inst, "optimal-split-total-cost");
            return best_split_placement(inst);
        case MechanismId::MedianPerFacility: {
            require_two_facilities(inst, "median-per-facility");
            return {group_lower_median(top_choice_group(inst, 0)),
                    group_lower_median(top_choice_group(inst, 1))};
        }
    }
    throw std::invalid_argument("unknown mechanism");
}

const char* mechanism_name(MechanismId mech) {
    switch (mech) {
        case MechanismId::Midpoints: return "midpoints";
        case MechanismId::PreferredMidpoints: return "preferred-midpoints";
        case MechanismId::FixedCenter: return "fixed-center";
        case MechanismId::Extremes: return "extremes";
        case MechanismId::OptimalSplitTotalCost: return "optimal-split-total-cost";
        case MechanismId::MedianPerFacility: return "median-per-facility";
    }
    return "?";
}

MechanismId parse_mechanism(std::string_view name) {
    for (MechanismId mech : all_mechanisms())
        if (name == mechanism_name(mech)) return mech;
    throw std::invalid_argument("unknown mechanism: '" + std::string(name) + "'");
}

std::vector<MechanismId> all_mechanisms() {
    return {MechanismId::Midpoints,       MechanismId::PreferredMidpoints,
            MechanismId::FixedCenter,     MechanismId::Extremes,
            MechanismId::OptimalSplitTotalCost, MechanismId::MedianPerFacility};
}

}  // namespace ordloc
