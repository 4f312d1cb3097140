#include "gsalab/g0.hpp"

#include <cmath>

#include "gsalab/core.hpp"

namespace gsalab {

std::string to_string(G0Kind kind) {
    switch (kind) {
        case G0Kind::Fixed: return "fixed";
        case G0Kind::PopulationSpread: return "population_spread";
    }
    return "unknown";
}

std::optional<G0Kind> g0_kind_from_string(std::string_view name) {
    if (name == "fixed") return G0Kind::Fixed;
    if (name == "population_spread") return G0Kind::PopulationSpread;
    return std::nullopt;
}

namespace {

double require_param(const StrategySpec& spec, const std::string& name) {
    const auto it = spec.params.find(name);
    if (it == spec.params.end()) {
        throw ConfigError("g0.params." + name, "missing required parameter '" + name +
                                                   "' for g0.kind '" + to_string(spec.kind) + "'");
    }
    if (!std::isfinite(it->second) || !(it->second > 0)) {
        throw ConfigError("g0.params." + name,
                          "parameter '" + name + "' must be a positive finite real");
    }
    return it->second;
}

void reject_unknown(const StrategySpec& spec, std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : spec.params) {
        bool found = false;
        for (auto k : known) found = found || (key == k);
        if (!found) {
            throw ConfigError("g0.params." + key, "unknown parameter '" + key +
                                                      "' for g0.kind '" + to_string(spec.kind) + "'");
        }
    }
}

} // namespace

void validate(const StrategySpec& spec) {
    switch (spec.kind) {
        case G0Kind::Fixed:
            reject_unknown(spec, {"value"});
            require_param(spec, "value");
            return;
        case G0Kind::PopulationSpread:
            reject_unknown(spec, {"scale"});
            require_param(spec, "scale");
            return;
    }
    throw ConfigError("g0.kind", "unknown g0 strategy kind");
}

double mean_pairwise_distance(std::span<const double> positions, int population, int dimension) {
    double sum = 0.0;
    for (int i = 0; i < population; ++i) {
        const auto xi = positions.subspan(static_cast<std::size_t>(i) * dimension, dimension);
        for (int j = i + 1; j < population; ++j) {
            const auto xj = positions.subspan(static_cast<std::size_t>(j) * dimension, dimension);
            sum += euclidean_distance(xi, xj);
        }
    }
    const double pairs = static_cast<double>(population) * (population - 1) / 2.0;
    return sum / pairs;
}

double fixed_g0(const StrategySpec& spec, const InitialSnapshot&) {
    return spec.params.at("value");
}

double population_spread_g0(const StrategySpec& spec, const InitialSnapshot& snapshot) {
    if (snapshot.population < 2) {
        throw DomainError("population_spread g0 needs at least 2 agents");
    }
    const double spread =
        mean_pairwise_distance(snapshot.positions, snapshot.population, snapshot.dimension);
    if (!(spread > 0)) {
        throw DomainError("population_spread g0 is undefined: initial population has zero spread");
    }
    return spec.params.at("scale") * spread;
}

G0Strategy select_strategy(const StrategySpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case G0Kind::Fixed:
            return [spec](const InitialSnapshot& s) { return fixed_g0(spec, s); };
        case G0Kind::PopulationSpread:
            return [spec](const InitialSnapshot& s) { return population_spread_g0(spec, s); };
    }
    throw ConfigError("g0.kind", "unknown g0 strategy kind");
}

} // namespace gsalab
