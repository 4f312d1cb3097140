#include <cmath>

#include "gsalab/core.hpp"
#include "gsalab/kernels.hpp"

namespace gsalab::kernels::serial {

int evaluate_fitness(Population& pop, const ProblemSpec& spec) {
    for (int i = 0; i < pop.size; ++i) {
        pop.fitness[i] = spec.objective(pop.position(i));
        if (!std::isfinite(pop.fitness[i])) return i;
    }
    return -1;
}

void accelerations(const Population& pop, std::span<const int> kbest, double g,
                   double epsilon, CounterRng& rng, std::span<double> accel) {
    for (int i = 0; i < pop.size; ++i) {
        agent_acceleration(pop, i, kbest, g, epsilon, [&] { return rng.uniform01(); },
                           accel.subspan(static_cast<std::size_t>(i) * pop.dim, pop.dim));
    }
}

void integrate(Population& pop, std::span<const double> accel, const ProblemSpec& spec,
               CounterRng& rng) {
    for (int i = 0; i < pop.size; ++i) {
        update_velocity(pop.velocity(i),
                        accel.subspan(static_cast<std::size_t>(i) * pop.dim, pop.dim),
                        [&] { return rng.uniform01(); });
        update_position(pop.position(i), pop.velocity(i), spec);
    }
}

} // namespace gsalab::kernels::serial
