#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsalab {

enum class Sense { Minimize, Maximize };
enum class BoundaryPolicy { Clamp };

// ---------------------------------------------------------------------------
// Errors. The CLI maps each type to a machine-readable category on stderr.

struct GsaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration value; `key` names the offending field.
struct ConfigError : GsaError {
    std::string key;
    ConfigError(std::string key_, const std::string& message)
        : GsaError(message), key(std::move(key_)) {}
};

// Caller broke an API contract (dimension mismatch, empty input, missing pairing).
struct ContractError : GsaError {
    using GsaError::GsaError;
};

// Unknown benchmark function id.
struct RegistryError : GsaError {
    using GsaError::GsaError;
};

// A strategy formula is undefined for the given (degenerate) input.
struct DomainError : GsaError {
    using GsaError::GsaError;
};

// Objective produced a non-finite value; the run cannot continue.
struct RunAbortError : GsaError {
    int agent;
    int iteration;
    RunAbortError(int agent_, int iteration_, const std::string& message)
        : GsaError(message), agent(agent_), iteration(iteration_) {}
};

struct IoError : GsaError {
    std::string path;
    IoError(std::string path_, const std::string& message)
        : GsaError(message), path(std::move(path_)) {}
};

// ---------------------------------------------------------------------------

using Objective = std::function<double(std::span<const double>)>;

struct ProblemSpec {
    int dimension = 0;
    std::vector<double> lower;  // length dimension
    std::vector<double> upper;  // length dimension
    Objective objective;        // deterministic; thread-safe for OpenMP kernels
    Sense sense = Sense::Minimize;
};

// Throws ConfigError on invalid dimension/bounds or a missing objective.
void validate(const ProblemSpec& spec);

// Population state, structure-of-arrays. Row i of positions/velocities is
// agent i; fitness and masses are per-agent scalars.
struct Population {
    int size = 0;
    int dim = 0;
    std::vector<double> positions;   // size*dim, row-major
    std::vector<double> velocities;  // size*dim, row-major
    std::vector<double> fitness;     // size
    std::vector<double> masses;      // size, normalized inertial masses

    Population() = default;
    Population(int n, int d)
        : size(n), dim(d),
          positions(static_cast<std::size_t>(n) * d, 0.0),
          velocities(static_cast<std::size_t>(n) * d, 0.0),
          fitness(n, 0.0), masses(n, 0.0) {}

    std::span<double> position(int i) {
        return {positions.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
    std::span<const double> position(int i) const {
        return {positions.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
    std::span<double> velocity(int i) {
        return {velocities.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
    std::span<const double> velocity(int i) const {
        return {velocities.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
};

struct IterationRecord {
    int iteration = 0;         // t in [0, T-1]
    double best_fitness = 0;   // best objective seen up to and including t
    double mean_fitness = 0;   // mean of the population's fitness at t
    double g_value = 0;        // G(t) used this iteration
    int kbest = 0;             // K(t)

    bool operator==(const IterationRecord&) const = default;
};

struct RunResult {
    std::vector<IterationRecord> records;  // length T
    std::vector<double> best_position;     // length d
    double best_fitness = 0;               // == records.back().best_fitness
    double g0_used = 0;                    // the strategy's output for this run
    std::uint64_t seed = 0;

    bool operator==(const RunResult&) const = default;
};

} // namespace gsalab
