#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gsalab/g0.hpp"
#include "gsalab/rng.hpp"
#include "gsalab/types.hpp"

namespace gsalab {

struct GsaConfig {
    int population_size = 50;
    int iterations = 1000;
    double alpha = 20.0;      // decay exponent of G(t)
    double epsilon = 1e-10;   // force-law distance regularizer
    StrategySpec g0;          // how G(0) is determined
    BoundaryPolicy boundary = BoundaryPolicy::Clamp;
    std::uint64_t seed = 0;
};

// Throws ConfigError naming the offending field. Also validates the strategy.
void validate(const GsaConfig& config);

// G(t) = g0 * exp(-alpha * t / T). Exactly g0 at t = 0.
double gravitational_constant(int t, int iterations, double g0, double alpha);

// Min-max normalized inertial masses: m_i = (fit_i - worst)/(best - worst),
// M_i = m_i / sum(m). Best agent gets the largest mass, worst gets 0.
// Degenerate best == worst yields uniform 1/N.
std::vector<double> compute_masses(std::span<const double> fitness, Sense sense);

// Linear ramp K(t) = N - floor((N-1) * t / max(T-1, 1)); K(0)=N, K(T-1)=1.
int kbest_size(int t, int iterations, int population);

// Indices of the k best agents by fitness, ties broken by lower index,
// in ascending index order (the order force draws are consumed in).
std::vector<int> kbest_indices(std::span<const double> fitness, int k, Sense sense);

double euclidean_distance(std::span<const double> a, std::span<const double> b);

// Acceleration of one agent in the mass-canceled form
//   a_i^d = sum_{j in kbest, j != i} rand_{j,d} * G * M_j * (x_j^d - x_i^d) / (R_ij + eps)
// (the agent's own mass cancels between force and F/M, so the worst agent's
// M_i = 0 needs no special case). One draw per (source, dimension), sources
// in ascending kbest order, dimensions innermost. Shared by the serial and
// OpenMP kernels so both paths perform identical arithmetic.
template <class DrawFn>
void agent_acceleration(const Population& pop, int agent, std::span<const int> kbest,
                        double g, double epsilon, DrawFn&& draw, std::span<double> out) {
    for (auto& v : out) v = 0.0;
    const auto xi = pop.position(agent);
    for (int j : kbest) {
        if (j == agent) continue;
        const auto xj = pop.position(j);
        const double dist = euclidean_distance(xi, xj);
        const double coef = g * pop.masses[j] / (dist + epsilon);
        for (int k = 0; k < pop.dim; ++k) {
            out[k] += draw() * coef * (xj[k] - xi[k]);
        }
    }
}

// v'[k] = rand_k * v[k] + a[k], one draw per dimension.
template <class DrawFn>
void update_velocity(std::span<double> velocity, std::span<const double> acceleration,
                     DrawFn&& draw) {
    for (std::size_t k = 0; k < velocity.size(); ++k) {
        velocity[k] = draw() * velocity[k] + acceleration[k];
    }
}

// x += v, then clamp to the box; a clamped coordinate gets its velocity
// component zeroed. In-place counterpart of the (x', v') update.
void update_position(std::span<double> position, std::span<double> velocity,
                     const ProblemSpec& spec);

enum class ExecMode { Serial, OpenMP };

struct RunOptions {
    ExecMode mode = ExecMode::Serial;
    // Test hook: bypass select_strategy(config.g0) with an arbitrary callable.
    const G0Strategy* strategy_override = nullptr;
};

struct State {
    Population pop;
    int t = 0;
    double best_fitness = 0;            // best-so-far, per spec.sense
    std::vector<double> best_position;  // position that achieved it
    std::vector<IterationRecord> records;
    std::vector<double> accel;          // scratch, size*dim
};

// Samples positions uniformly in the box (agent-major, dimension-minor draw
// order), zeroes velocities, evaluates the initial fitness.
State init_state(const ProblemSpec& spec, const GsaConfig& config, CounterRng& rng,
                 ExecMode mode = ExecMode::Serial);

// One GSA iteration: evaluate, bookkeep, G, masses, Kbest, accelerations,
// velocity+position updates, t+1. Draw order per the README contract.
void step(State& state, const ProblemSpec& spec, const GsaConfig& config, double g0,
          CounterRng& rng, ExecMode mode = ExecMode::Serial);

// Full run: validate, initialize, fix G0 via the configured strategy (invoked
// exactly once, before iteration 0), then `iterations` steps.
RunResult run(const ProblemSpec& spec, const GsaConfig& config, const RunOptions& options = {});

} // namespace gsalab
