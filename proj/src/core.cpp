#include "gsalab/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gsalab/kernels.hpp"

namespace gsalab {

namespace {

bool better(double a, double b, Sense sense) {
    return sense == Sense::Minimize ? a < b : a > b;
}

} // namespace

void validate(const ProblemSpec& spec) {
    if (spec.dimension < 1) {
        throw ConfigError("problem.dimension", "problem.dimension must be >= 1, got " +
                                                   std::to_string(spec.dimension));
    }
    if (static_cast<int>(spec.lower.size()) != spec.dimension ||
        static_cast<int>(spec.upper.size()) != spec.dimension) {
        throw ConfigError("problem.bounds", "bound vectors must have length dimension");
    }
    for (int k = 0; k < spec.dimension; ++k) {
        if (!(spec.lower[k] < spec.upper[k])) {
            throw ConfigError("problem.bounds",
                              "lower[" + std::to_string(k) + "] must be < upper[" +
                                  std::to_string(k) + "]");
        }
    }
    if (!spec.objective) {
        throw ConfigError("problem.objective", "objective is not set");
    }
}

void validate(const GsaConfig& config) {
    if (config.population_size < 2) {
        throw ConfigError("gsa.population_size", "gsa.population_size must be >= 2, got " +
                                                     std::to_string(config.population_size));
    }
    if (config.iterations < 1) {
        throw ConfigError("gsa.iterations", "gsa.iterations must be >= 1, got " +
                                                std::to_string(config.iterations));
    }
    if (!(config.alpha > 0) || !std::isfinite(config.alpha)) {
        throw ConfigError("gsa.alpha", "gsa.alpha must be a positive finite real");
    }
    if (!(config.epsilon > 0) || !std::isfinite(config.epsilon)) {
        throw ConfigError("gsa.epsilon", "gsa.epsilon must be a positive finite real");
    }
    validate(config.g0);
}

double gravitational_constant(int t, int iterations, double g0, double alpha) {
    if (t == 0) return g0;
    return g0 * std::exp(-alpha * static_cast<double>(t) / static_cast<double>(iterations));
}

std::vector<double> compute_masses(std::span<const double> fitness, Sense sense) {
    const int n = static_cast<int>(fitness.size());
    std::vector<double> masses(n, 0.0);
    if (n == 0) return masses;

    const auto [min_it, max_it] = std::minmax_element(fitness.begin(), fitness.end());
    const double best = sense == Sense::Minimize ? *min_it : *max_it;
    const double worst = sense == Sense::Minimize ? *max_it : *min_it;

    if (best == worst) {
        std::fill(masses.begin(), masses.end(), 1.0 / n);
        return masses;
    }

    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        masses[i] = (fitness[i] - worst) / (best - worst);
        sum += masses[i];
    }
    for (auto& m : masses) m /= sum;
    return masses;
}

int kbest_size(int t, int iterations, int population) {
    const long long span = std::max(iterations - 1, 1);
    const long long dropped = static_cast<long long>(population - 1) * t / span;
    return population - static_cast<int>(dropped);
}

std::vector<int> kbest_indices(std::span<const double> fitness, int k, Sense sense) {
    std::vector<int> order(fitness.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (fitness[a] != fitness[b]) return better(fitness[a], fitness[b], sense);
        return a < b;  // tie: lower index ranks better
    });
    order.resize(k);
    std::sort(order.begin(), order.end());  // draws are consumed in ascending index order
    return order;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

void update_position(std::span<double> position, std::span<double> velocity,
                     const ProblemSpec& spec) {
    for (std::size_t k = 0; k < position.size(); ++k) {
        const double candidate = position[k] + velocity[k];
        const double clamped = std::min(spec.upper[k], std::max(spec.lower[k], candidate));
        if (clamped != candidate) velocity[k] = 0.0;
        position[k] = clamped;
    }
}

namespace {

int evaluate(Population& pop, const ProblemSpec& spec, ExecMode mode) {
    return mode == ExecMode::OpenMP ? kernels::omp::evaluate_fitness(pop, spec)
                                    : kernels::serial::evaluate_fitness(pop, spec);
}

void throw_run_abort(int agent, int iteration) {
    throw RunAbortError(agent, iteration,
                        "non-finite objective value for agent " + std::to_string(agent) +
                            " at iteration " + std::to_string(iteration));
}

} // namespace

State init_state(const ProblemSpec& spec, const GsaConfig& config, CounterRng& rng,
                 ExecMode mode) {
    const int n = config.population_size;
    const int d = spec.dimension;

    State state;
    state.pop = Population(n, d);
    state.accel.assign(static_cast<std::size_t>(n) * d, 0.0);
    state.records.reserve(config.iterations);

    // Agent-major, dimension-minor initialization draws.
    for (int i = 0; i < n; ++i) {
        auto row = state.pop.position(i);
        for (int k = 0; k < d; ++k) {
            row[k] = spec.lower[k] + rng.uniform01() * (spec.upper[k] - spec.lower[k]);
        }
    }

    if (int bad = evaluate(state.pop, spec, mode); bad >= 0) throw_run_abort(bad, 0);

    int best = 0;
    for (int i = 1; i < n; ++i) {
        if (better(state.pop.fitness[i], state.pop.fitness[best], spec.sense)) best = i;
    }
    state.best_fitness = state.pop.fitness[best];
    state.best_position.assign(state.pop.position(best).begin(), state.pop.position(best).end());
    return state;
}

void step(State& state, const ProblemSpec& spec, const GsaConfig& config, double g0,
          CounterRng& rng, ExecMode mode) {
    Population& pop = state.pop;
    const int n = pop.size;
    const int t = state.t;

    // (1) evaluate
    if (int bad = evaluate(pop, spec, mode); bad >= 0) throw_run_abort(bad, t);

    // (2) bookkeeping: best-so-far and mean of the current fitness
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += pop.fitness[i];
        if (better(pop.fitness[i], state.best_fitness, spec.sense)) {
            state.best_fitness = pop.fitness[i];
            auto row = pop.position(i);
            state.best_position.assign(row.begin(), row.end());
        }
    }

    // (3)-(5) schedule values for this iteration
    const double g = gravitational_constant(t, config.iterations, g0, config.alpha);
    pop.masses = compute_masses(pop.fitness, spec.sense);
    const int k = kbest_size(t, config.iterations, n);
    const std::vector<int> kbest = kbest_indices(pop.fitness, k, spec.sense);

    // (6) accelerations, (7) velocity + position updates
    if (mode == ExecMode::OpenMP) {
        kernels::omp::accelerations(pop, kbest, g, config.epsilon, rng, state.accel);
        kernels::omp::integrate(pop, state.accel, spec, rng);
    } else {
        kernels::serial::accelerations(pop, kbest, g, config.epsilon, rng, state.accel);
        kernels::serial::integrate(pop, state.accel, spec, rng);
    }

    state.records.push_back({t, state.best_fitness, sum / n, g, k});
    state.t = t + 1;
}

RunResult run(const ProblemSpec& spec, const GsaConfig& config, const RunOptions& options) {
    validate(spec);
    validate(config);
    const G0Strategy strategy =
        options.strategy_override ? *options.strategy_override : select_strategy(config.g0);

    CounterRng rng(config.seed);
    State state = init_state(spec, config, rng, options.mode);

    const InitialSnapshot snapshot{&spec, config.population_size, spec.dimension,
                                   state.pop.positions, state.pop.fitness};
    const double g0 = strategy(snapshot);
    if (!std::isfinite(g0) || !(g0 > 0)) {
        throw DomainError("g0 strategy returned a non-positive or non-finite value");
    }

    for (int t = 0; t < config.iterations; ++t) {
        step(state, spec, config, g0, rng, options.mode);
    }

    return RunResult{std::move(state.records), std::move(state.best_position),
                     state.best_fitness, g0, config.seed};
}

} // namespace gsalab
