#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ordloc/generators.hpp"

using namespace ordloc;

TEST_CASE("generation is deterministic per (seed, trial) and distinct across trials") {
    GeneratorSpec spec;
    spec.n = 8;
    spec.seed = 42;
    Instance a = generate(spec, 3);
    Instance b = generate(spec, 3);
    REQUIRE(a.agent_count() == b.agent_count());
    for (std::size_t i = 0; i < a.agent_count(); ++i) {
        CHECK(a.agents[i].x == b.agents[i].x);
        CHECK(a.agents[i].pref == b.agents[i].pref);
    }
    CHECK(generate(spec, 4).locations() != a.locations());
    GeneratorSpec other = spec;
    other.seed = 43;
    CHECK(generate(other, 3).locations() != a.locations());
}

TEST_CASE("locations are millionth-denominator rationals inside the unit interval") {
    for (LocationLaw law : {LocationLaw::Uniform, LocationLaw::TwoClusters,
                            LocationLaw::Endpoints}) {
        GeneratorSpec spec;
        spec.n = 40;
        spec.location_law = law;
        spec.seed = 5;
        Instance inst = generate(spec, 1);
        for (const Agent& a : inst.agents) {
            CHECK(a.x >= 0);
            CHECK(a.x <= 1);
            CHECK(mpz_class(1000000) % a.x.get_den() == 0);
        }
    }
}

TEST_CASE("two-clusters law leaves the central gap empty") {
    GeneratorSpec spec;
    spec.n = 200;
    spec.location_law = LocationLaw::TwoClusters;
    spec.cluster_gap = Rat(1, 2);
    spec.seed = 11;
    Instance inst = generate(spec, 0);
    bool left = false, right = false;
    for (const Agent& a : inst.agents) {
        CHECK((a.x <= Rat(1, 4) || a.x >= Rat(3, 4)));
        left = left || a.x <= Rat(1, 4);
        right = right || a.x >= Rat(3, 4);
    }
    CHECK(left);
    CHECK(right);
    spec.cluster_gap = Rat(1);
    CHECK_THROWS_AS(generate(spec, 0), std::invalid_argument);
}

TEST_CASE("endpoints law draws only 0 and 1") {
    GeneratorSpec spec;
    spec.n = 50;
    spec.location_law = LocationLaw::Endpoints;
    spec.seed = 3;
    Instance inst = generate(spec, 0);
    std::set<Rat> seen;
    for (const Agent& a : inst.agents) seen.insert(a.x);
    CHECK(seen == std::set<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("blockwise preferences rotate the identity ranking per block") {
    GeneratorSpec spec;
    spec.n = 6;
    spec.m = 3;
    spec.alpha = {Rat(1), Rat(2), Rat(3)};
    spec.preference_law = PreferenceLaw::Blockwise;
    spec.seed = 9;
    Instance inst = generate(spec, 0);
    // blocks of two agents get rotations by 0, 1, 2
    CHECK(inst.agents[0].pref == std::vector<int>{0, 1, 2});
    CHECK(inst.agents[1].pref == std::vector<int>{0, 1, 2});
    CHECK(inst.agents[2].pref == std::vector<int>{1, 2, 0});
    CHECK(inst.agents[3].pref == std::vector<int>{1, 2, 0});
    CHECK(inst.agents[4].pref == std::vector<int>{2, 0, 1});
    CHECK(inst.agents[5].pref == std::vector<int>{2, 0, 1});
}

TEST_CASE("iid preferences cover both rankings of two facilities") {
    GeneratorSpec spec;
    spec.n = 64;
    spec.seed = 17;
    Instance inst = generate(spec, 2);
    std::set<std::vector<int>> seen;
    for (const Agent& a : inst.agents) seen.insert(a.pref);
    CHECK(seen.size() == 2);
}

TEST_CASE("trial streams are decorrelated") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t t = 0; t < 100; ++t) seeds.insert(trial_stream_seed(1, t));
    CHECK(seeds.size() == 100);
    CHECK(trial_stream_seed(1, 0) != trial_stream_seed(2, 0));
}

TEST_CASE("generator validates its spec") {
    GeneratorSpec spec;
    spec.n = 0;
    CHECK_THROWS_AS(generate(spec, 0), std::invalid_argument);
    spec.n = 3;
    spec.m = 0;
    spec.alpha = {};
    CHECK_THROWS_AS(generate(spec, 0), std::invalid_argument);
}
