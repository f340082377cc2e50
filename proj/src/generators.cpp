#include "ordloc/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace ordloc {

namespace {

constexpr long kDenom = 1000000;

// round to the nearest multiple of 1/kDenom, clamped to [0,1]
Rat snap_location(const Rat& v) {
    Rat scaled = v * kDenom;
    mpz_class rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    if (rounded < 0) rounded = 0;
    if (rounded > kDenom) rounded = kDenom;
    Rat out(rounded, kDenom);
    out.canonicalize();
    return out;
}

Rat draw_location(SplitMix64& rng, const GeneratorSpec& spec) {
    switch (spec.location_law) {
        case LocationLaw::Uniform:
            return make_rat(static_cast<long>(rng.below(kDenom + 1)), kDenom);
        case LocationLaw::TwoClusters: {
            Rat width = (Rat(1) - spec.cluster_gap) / 2;
            bool right = rng.below(2) == 1;
            Rat u(static_cast<long>(rng.below(kDenom + 1)), kDenom);
            Rat raw = right ? Rat(Rat(1) - width + u * width) : Rat(u * width);
            return snap_location(raw);
        }
        case LocationLaw::Endpoints:
            return Rat(static_cast<long>(rng.below(2)));
    }
    throw std::invalid_argument("unknown location law");
}

std::vector<int> draw_pref(SplitMix64& rng, const GeneratorSpec& spec, std::size_t agent) {
    std::vector<int> pref(spec.m);
    std::iota(pref.begin(), pref.end(), 0);
    if (spec.preference_law == PreferenceLaw::IIDUniform) {
        for (std::size_t j = spec.m; j > 1; --j)
            std::swap(pref[j - 1], pref[rng.below(j)]);
    } else {
        std::size_t block = agent * spec.m / spec.n;  // n >= 1 checked by caller
        std::rotate(pref.begin(), pref.begin() + block, pref.end());
    }
    return pref;
}

}  // namespace

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 base{seed};
    SplitMix64 stream{base.next() + trial};
    return stream.next();
}

Instance generate(const GeneratorSpec& spec, std::uint64_t trial) {
    if (spec.n == 0) throw std::invalid_argument("generator needs n >= 1");
    if (spec.m == 0) throw std::invalid_argument("generator needs m >= 1");
    if (spec.location_law == LocationLaw::TwoClusters &&
        (spec.cluster_gap < 0 || spec.cluster_gap >= 1))
        throw std::invalid_argument("cluster gap must lie in [0,1)");

    SplitMix64 rng{trial_stream_seed(spec.seed, trial)};
    std::vector<Agent> agents;
    agents.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        Agent a;
        a.x = draw_location(rng, spec);
        a.pref = draw_pref(rng, spec, i);
        agents.push_back(std::move(a));
    }
    return Instance::make(spec.model, spec.alpha, std::move(agents));
}

const char* location_law_name(LocationLaw law) {
    switch (law) {
        case LocationLaw::Uniform: return "uniform";
        case LocationLaw::TwoClusters: return "two-clusters";
        case LocationLaw::Endpoints: return "endpoints";
    }
    return "?";
}

LocationLaw parse_location_law(std::string_view name) {
    if (name == "uniform") return LocationLaw::Uniform;
    if (name == "two-clusters") return LocationLaw::TwoClusters;
    if (name == "endpoints") return LocationLaw::Endpoints;
    throw std::invalid_argument("unknown location law: '" + std::string(name) + "'");
}

const char* preference_law_name(PreferenceLaw law) {
    return law == PreferenceLaw::IIDUniform ? "iid" : "blockwise";
}

PreferenceLaw parse_preference_law(std::string_view name) {
    if (name == "iid") return PreferenceLaw::IIDUniform;
    if (name == "blockwise") return PreferenceLaw::Blockwise;
    throw std::invalid_argument("unknown preference law: '" + std::string(name) + "'");
}

}  // namespace ordloc
