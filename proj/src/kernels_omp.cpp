#include <algorithm>
#include <cmath>
#include <vector>

#include "gsalab/core.hpp"
#include "gsalab/kernels.hpp"

namespace gsalab::kernels::omp {

int evaluate_fitness(Population& pop, const ProblemSpec& spec) {
    int bad = pop.size;
#pragma omp parallel for schedule(static) reduction(min : bad)
    for (int i = 0; i < pop.size; ++i) {
        pop.fitness[i] = spec.objective(pop.position(i));
        if (!std::isfinite(pop.fitness[i])) bad = std::min(bad, i);
    }
    return bad == pop.size ? -1 : bad;
}

void accelerations(const Population& pop, std::span<const int> kbest, double g,
                   double epsilon, CounterRng& rng, std::span<double> accel) {
    const int n = pop.size;
    const int d = pop.dim;

    // Draw index offsets: agent i consumes (|kbest| - [i in kbest]) * d draws.
    std::vector<char> member(n, 0);
    for (int j : kbest) member[j] = 1;
    std::vector<std::uint64_t> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t sources = kbest.size() - (member[i] ? 1 : 0);
        offset[i + 1] = offset[i] + sources * d;
    }
    const std::uint64_t base = rng.consumed();

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        std::uint64_t index = base + offset[i];
        agent_acceleration(pop, i, kbest, g, epsilon, [&] { return rng.at(index++); },
                           accel.subspan(static_cast<std::size_t>(i) * d, d));
    }
    rng.skip(offset[n]);
}

void integrate(Population& pop, std::span<const double> accel, const ProblemSpec& spec,
               CounterRng& rng) {
    const int n = pop.size;
    const int d = pop.dim;
    const std::uint64_t base = rng.consumed();

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        std::uint64_t index = base + static_cast<std::uint64_t>(i) * d;
        update_velocity(pop.velocity(i),
                        accel.subspan(static_cast<std::size_t>(i) * d, d),
                        [&] { return rng.at(index++); });
        update_position(pop.position(i), pop.velocity(i), spec);
    }
    rng.skip(static_cast<std::uint64_t>(n) * d);
}

} // namespace gsalab::kernels::omp
