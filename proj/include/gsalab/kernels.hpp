#pragma once

#include <span>

#include "gsalab/rng.hpp"
#include "gsalab/types.hpp"

// Per-iteration kernels. `serial` is the reference implementation: plain
// loops that consume draws from the stream one by one, in the pinned order.
// `omp` parallelizes over agents; it reads the same draws by index (the
// counter RNG makes draw values a function of position in the stream, not of
// evaluation order) and then advances the stream by the total count, so both
// paths produce bit-identical populations.
namespace gsalab::kernels {

namespace serial {

// Fills pop.fitness. Returns the index of the first agent whose objective
// came back non-finite, or -1.
int evaluate_fitness(Population& pop, const ProblemSpec& spec);

// accel is size*dim, row-major.
void accelerations(const Population& pop, std::span<const int> kbest, double g,
                   double epsilon, CounterRng& rng, std::span<double> accel);

// Velocity then position update for every agent.
void integrate(Population& pop, std::span<const double> accel, const ProblemSpec& spec,
               CounterRng& rng);

} // namespace serial

namespace omp {

// Same contracts as the serial kernels. evaluate_fitness reports the
// lowest-index offender so the error matches the serial path. The objective
// is invoked concurrently and must be thread-safe.
int evaluate_fitness(Population& pop, const ProblemSpec& spec);

void accelerations(const Population& pop, std::span<const int> kbest, double g,
                   double epsilon, CounterRng& rng, std::span<double> accel);

void integrate(Population& pop, std::span<const double> accel, const ProblemSpec& spec,
               CounterRng& rng);

} // namespace omp

} // namespace gsalab::kernels
