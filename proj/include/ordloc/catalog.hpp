#ifndef ORDLOD_CATALOG_HPP
#define ORDLOD_CATALOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordloc/core.hpp"

namespace ordloc {

// A closed-form anchor: evaluating `objective` at `placement` (optionally on
// a variant preference profile) must equal `value` exactly. Verified at
// construction time; a failed check aborts the build. When `optimum` is set
// the value is claimed to be the instance's optimal objective value, so the
// certified grid oracle must bracket it; point evaluations leave it unset.
struct ReferenceCheck {
    std::string label;
    std::optional<std::vector<std::vector<int>>> pref_override;
    Placement placement;
    Objective objective;
    Rat value;
    bool optimum = true;
};

// A single named misreport taken from the instance's accompanying argument.
struct ProofDeviation {
    std::size_t agent = 0;  // 0-based
    std::optional<std::vector<int>> pref;
    std::optional<Rat> location;
};

struct PaperInstance {
    std::string id;
    std::string description;
    Instance instance;
    std::vector<std::pair<std::string, Rat>> parameters;  // derived quantities, e.g. s, t'
    std::vector<ReferenceCheck> checks;
    std::optional<ProofDeviation> deviation;
};

struct CatalogEntryInfo {
    std::string id;
    std::string description;
    std::string alpha_validity;  // human-readable constraint on alpha
    bool uses_epsilon = false;
    bool uses_n = false;
};

std::vector<CatalogEntryInfo> catalog();

// Builds a cataloged instance for the supplied alpha (multiplicative second
// rank coefficient). Entries outside their alpha validity range, or with an
// epsilon too large for the construction's strict inequalities, throw
// std::invalid_argument. n applies only to entries with uses_n.
PaperInstance build_catalog_instance(const std::string& id, const Rat& alpha,
                                     const Rat& epsilon = Rat(1, 1000),
                                     std::optional<std::size_t> n = std::nullopt);

// The variant instance a check runs against (applies pref_override if any).
Instance check_instance(const PaperInstance& pi, const ReferenceCheck& check);

}  // namespace ordloc

#endif
