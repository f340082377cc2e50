#ifndef ORDLOC_GENERATORS_HPP
#define ORDLOC_GENERATORS_HPP

#include <cstdint>

#include "ordloc/core.hpp"

namespace ordloc {

enum class LocationLaw { Uniform, TwoClusters, Endpoints };
enum class PreferenceLaw { IIDUniform, Blockwise };

// Random-instance family. Locations are always snapped to exact rationals
// with denominator 1e6 and clamped to [0,1]. TwoClusters leaves a central
// gap of width `cluster_gap` between two uniform clusters; Blockwise hands
// agent block j the ranking (j, j+1, ..., j-1).
struct GeneratorSpec {
    std::size_t n = 10;
    std::size_t m = 2;
    LocationLaw location_law = LocationLaw::Uniform;
    Rat cluster_gap = Rat(1, 2);
    PreferenceLaw preference_law = PreferenceLaw::IIDUniform;
    ModelKind model = ModelKind::Multiplicative;
    std::vector<Rat> alpha = {Rat(1), Rat(1)};
    std::uint64_t seed = 0;
};

// Deterministic across runs and platforms: the draw sequence is pinned to a
// splitmix64 stream derived from (seed, trial), one stream per trial, and
// never touches std:: distributions. Per agent: location draws first, then
// preference draws.
Instance generate(const GeneratorSpec& spec, std::uint64_t trial = 0);

const char* location_law_name(LocationLaw law);
LocationLaw parse_location_law(std::string_view name);
const char* preference_law_name(PreferenceLaw law);
PreferenceLaw parse_preference_law(std::string_view name);

// Exposed for tests: the raw engine behind generate().
struct SplitMix64 {
    std::uint64_t state = 0;
    std::uint64_t next();
    // uniform draw in [0, bound) via 128-bit multiply; bound >= 1
    std::uint64_t below(std::uint64_t bound);
};

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace ordloc

#endif
