#include <doctest.h>

#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "gsalab/benchmarks.hpp"
#include "gsalab/core.hpp"
#include "gsalab/g0.hpp"

using namespace gsalab;

namespace {

ProblemSpec unit_box(int dim) {
    ProblemSpec spec;
    spec.dimension = dim;
    spec.lower.assign(dim, -1.0);
    spec.upper.assign(dim, 1.0);
    spec.objective = [](std::span<const double> x) {
        double sum = 0.0;
        for (double v : x) sum += v * v;
        return sum;
    };
    return spec;
}

InitialSnapshot snapshot_of(const ProblemSpec& spec, const std::vector<double>& positions,
                            const std::vector<double>& fitness) {
    return InitialSnapshot{&spec, static_cast<int>(fitness.size()), spec.dimension, positions,
                           fitness};
}

} // namespace

TEST_CASE("fixed strategy returns its value and ignores the snapshot") {
    const ProblemSpec spec = unit_box(2);
    const StrategySpec fixed100{G0Kind::Fixed, {{"value", 100.0}}};
    const StrategySpec fixed1{G0Kind::Fixed, {{"value", 1.0}}};
    const StrategySpec fixed42{G0Kind::Fixed, {{"value", 42.0}}};

    const auto snap_a = snapshot_of(spec, {0.0, 0.0, 0.5, 0.5}, {0.0, 0.5});
    const auto snap_b = snapshot_of(spec, {-1.0, 1.0, 0.25, -0.75}, {2.0, 1.0});

    CHECK(fixed_g0(fixed100, snap_a) == 100.0);
    CHECK(fixed_g0(fixed1, snap_b) == 1.0);
    CHECK(fixed_g0(fixed42, snap_a) == fixed_g0(fixed42, snap_b));
}

TEST_CASE("population spread heuristic matches the hand-evaluated fixture") {
    // Three agents in d=2 at (0,0), (3,4), (6,8): pairwise distances 5, 10, 5.
    const ProblemSpec spec = unit_box(2);
    const std::vector<double> positions = {0.0, 0.0, 3.0, 4.0, 6.0, 8.0};
    const std::vector<double> fitness = {0.0, 25.0, 100.0};
    const StrategySpec spread{G0Kind::PopulationSpread, {{"scale", 1.5}}};

    const double expected = 1.5 * ((5.0 + 10.0 + 5.0) / 3.0);  // = 10
    const double actual = population_spread_g0(spread, snapshot_of(spec, positions, fitness));
    CHECK(std::abs(actual - expected) <= 1e-12 * expected);
    CHECK(std::abs(actual - 10.0) <= 1e-12 * 10.0);
}

TEST_CASE("strategies are pure: identical snapshots give identical outputs") {
    const ProblemSpec spec = unit_box(3);
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::vector<double> positions(4 * 3);
    for (auto& p : positions) p = coord(gen);
    const std::vector<double> fitness = {3.0, 1.0, 4.0, 1.0};

    const StrategySpec spread{G0Kind::PopulationSpread, {{"scale", 0.7}}};
    const double a = population_spread_g0(spread, snapshot_of(spec, positions, fitness));
    const double b = population_spread_g0(spread, snapshot_of(spec, positions, fitness));
    CHECK(a == b);
}

TEST_CASE("strategy outputs are finite and strictly positive on random snapshots") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    const ProblemSpec spec = unit_box(4);

    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 9);
        std::vector<double> positions(static_cast<std::size_t>(n) * 4);
        for (auto& p : positions) p = coord(gen);
        std::vector<double> fitness(n);
        for (auto& f : fitness) f = coord(gen);
        const auto snapshot = snapshot_of(spec, positions, fitness);

        for (const auto& strategy :
             {StrategySpec{G0Kind::Fixed, {{"value", 31.0}}},
              StrategySpec{G0Kind::PopulationSpread, {{"scale", 0.4}}}}) {
            const double g0 = select_strategy(strategy)(snapshot);
            REQUIRE(std::isfinite(g0));
            REQUIRE(g0 > 0.0);
        }
    }
}

TEST_CASE("degenerate snapshot is a domain error, not a silent default") {
    const ProblemSpec spec = unit_box(2);
    const std::vector<double> positions = {0.5, 0.5, 0.5, 0.5, 0.5, 0.5};  // all coincide
    const std::vector<double> fitness = {1.0, 1.0, 1.0};
    const StrategySpec spread{G0Kind::PopulationSpread, {{"scale", 1.0}}};
    CHECK_THROWS_AS(population_spread_g0(spread, snapshot_of(spec, positions, fitness)),
                    DomainError);
}

TEST_CASE("strategy validation names the offending key") {
    try {
        validate(StrategySpec{G0Kind::Fixed, {{"value", -1.0}}});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key == "g0.params.value");
    }

    try {
        validate(StrategySpec{G0Kind::Fixed, {{"value", 10.0}, {"bogus", 1.0}}});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key == "g0.params.bogus");
    }

    try {
        validate(StrategySpec{G0Kind::PopulationSpread, {}});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key == "g0.params.scale");
    }

    CHECK(!g0_kind_from_string("nosuch").has_value());
    CHECK(g0_kind_from_string("fixed") == G0Kind::Fixed);
    CHECK(g0_kind_from_string("population_spread") == G0Kind::PopulationSpread);
}

TEST_CASE("select_strategy returns a handle closing over validated params") {
    const ProblemSpec spec = unit_box(2);
    const auto snapshot = snapshot_of(spec, {0.0, 0.0, 1.0, 1.0}, {0.0, 2.0});
    CHECK(select_strategy(StrategySpec{G0Kind::Fixed, {{"value", 100.0}}})(snapshot) == 100.0);
    CHECK_THROWS_AS(select_strategy(StrategySpec{G0Kind::Fixed, {{"value", -5.0}}}), ConfigError);
}

TEST_CASE("the run loop invokes the strategy exactly once and records its output") {
    const ProblemSpec spec = benchmarks::make_problem("sphere", 3);
    GsaConfig config;
    config.population_size = 6;
    config.iterations = 8;
    config.seed = 13;

    int calls = 0;
    const G0Strategy counting = [&calls](const InitialSnapshot& snapshot) {
        ++calls;
        CHECK(snapshot.population == 6);
        CHECK(snapshot.dimension == 3);
        CHECK(snapshot.fitness.size() == 6);
        return 3.14159;
    };
    RunOptions options;
    options.strategy_override = &counting;

    const RunResult result = run(spec, config, options);
    CHECK(calls == 1);
    CHECK(result.g0_used == 3.14159);
    CHECK(result.records[0].g_value == 3.14159);  // G(0) == g0 exactly
}

TEST_CASE("population spread g0 integrates end to end") {
    const ProblemSpec spec = benchmarks::make_problem("rastrigin", 4);
    GsaConfig config;
    config.population_size = 10;
    config.iterations = 12;
    config.seed = 21;
    config.g0 = StrategySpec{G0Kind::PopulationSpread, {{"scale", 0.4}}};

    const RunResult result = run(spec, config);
    CHECK(std::isfinite(result.g0_used));
    CHECK(result.g0_used > 0.0);
    // spread of a uniform sample in [-5.12, 5.12]^4 is a few units
    CHECK(result.g0_used < 0.4 * 10.24 * 2.0);

    const RunResult again = run(spec, config);
    CHECK(result.g0_used == again.g0_used);
}

TEST_CASE("non-positive strategy output aborts the run") {
    const ProblemSpec spec = benchmarks::make_problem("sphere", 2);
    GsaConfig config;
    config.population_size = 4;
    config.iterations = 2;

    const G0Strategy broken = [](const InitialSnapshot&) { return 0.0; };
    RunOptions options;
    options.strategy_override = &broken;
    CHECK_THROWS_AS(run(spec, config, options), DomainError);
}
