#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gsalab/types.hpp"

namespace gsalab {

// How the initial gravitational constant G(0) is chosen for a run.
//   Fixed            — a constant, params: {value}
//   PopulationSpread — G0 = scale * mean pairwise Euclidean distance of the
//                      initial population, params: {scale}
enum class G0Kind { Fixed, PopulationSpread };

std::string to_string(G0Kind kind);
std::optional<G0Kind> g0_kind_from_string(std::string_view name);

struct StrategySpec {
    G0Kind kind = G0Kind::Fixed;
    std::map<std::string, double> params = {{"value", 100.0}};
};

// Rejects unknown parameter keys, missing required keys, and non-positive or
// non-finite values. Throws ConfigError naming the offending key.
void validate(const StrategySpec& spec);

// Everything a strategy may consult, captured right after initialization:
// the problem (bounds, dimension, sense), the sampled positions, and their
// fitness values.
struct InitialSnapshot {
    const ProblemSpec* problem = nullptr;
    int population = 0;
    int dimension = 0;
    std::span<const double> positions;  // population*dimension, row-major
    std::span<const double> fitness;    // population
};

// Mean of the N*(N-1)/2 pairwise Euclidean distances.
double mean_pairwise_distance(std::span<const double> positions, int population, int dimension);

// kind == Fixed: returns params["value"], ignoring the snapshot.
double fixed_g0(const StrategySpec& spec, const InitialSnapshot& snapshot);

// kind == PopulationSpread: scale * mean_pairwise_distance(...). Pure,
// consumes no draws. Throws DomainError when the population has collapsed
// to a single point (zero spread gives no usable scale).
double population_spread_g0(const StrategySpec& spec, const InitialSnapshot& snapshot);

using G0Strategy = std::function<double(const InitialSnapshot&)>;

// Validates `spec` and returns a callable closing over it.
G0Strategy select_strategy(const StrategySpec& spec);

} // namespace gsalab
