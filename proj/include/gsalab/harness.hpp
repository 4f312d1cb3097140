#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gsalab/core.hpp"
#include "gsalab/g0.hpp"
#include "gsalab/types.hpp"

namespace gsalab::harness {

enum class OutputFormat { Csv, Json };
enum class Pairing { Paired, Independent };

struct ProblemRef {
    std::string function;
    int dimension = 0;
};

struct ExperimentConfig {
    std::vector<ProblemRef> problems;
    GsaConfig gsa;  // template; seed and g0 strategy are filled per run
    std::vector<StrategySpec> strategies;
    std::vector<std::string> strategy_labels;  // derived; unique per strategy
    int runs = 1;
    std::uint64_t base_seed = 0;
    Pairing pairing = Pairing::Paired;
    std::string out_path = "gsa_out";
    OutputFormat format = OutputFormat::Csv;
};

// Parse + validate a JSON experiment config. Unknown keys and constraint
// violations raise ConfigError naming the offending key.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& text);  // same, from a buffer

// Per-run seed derivation (documented in the README):
//   paired:      mix_seed(mix_seed(base, problem_index), repetition)
//   independent: mix_seed(mix_seed(mix_seed(base, problem_index), strategy_index), repetition)
// Paired mode gives every strategy the same seed for a given (problem, r).
std::uint64_t run_seed(const ExperimentConfig& config, int problem_index,
                       int strategy_index, int repetition);

struct TaggedResult {
    int problem_index = 0;
    int strategy_index = 0;
    int repetition = 0;
    RunResult result;
};

// Executes every (problem, strategy, repetition) cell. Result order is
// deterministic: problem-major, then strategy, then repetition, regardless
// of scheduling. GSA_LAB_WORKERS > 1 runs cells concurrently (each run owns
// a derived RNG stream); kernels inside each run follow `mode`.
std::vector<TaggedResult> run_experiment(const ExperimentConfig& config,
                                         ExecMode mode = ExecMode::Serial);

struct SummaryStats {
    double mean = 0;
    double std = 0;     // population denominator
    double median = 0;  // even counts: mean of the two central order statistics
    double best = 0;    // min of finals (the suite minimizes)
    double worst = 0;   // max
    int over = 0;       // sample count
};

// Statistics over final best_fitness values of one (problem, strategy) cell.
SummaryStats summarize(std::span<const double> finals);

struct ComparisonRow {
    std::string function;
    int dimension = 0;
    std::string strategy;
    SummaryStats stats;
    double mean_g0 = 0;
    // Seed-paired head-to-head vs the baseline strategy (first fixed-kind
    // strategy, else strategy 0). win = lower final by > 1e-12, loss = higher
    // by > 1e-12, else tie. wins+ties+losses == runs.
    int wins = 0;
    int ties = 0;
    int losses = 0;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;  // problem-major, then strategy
    int baseline_strategy = 0;
};

ComparisonTable compare_strategies(const ExperimentConfig& config,
                                   std::span<const TaggedResult> results);

// Label used in output rows: strategy_labels[s] when set, else the kind name
// (suffixed with #s when the kind occurs more than once).
std::string strategy_label(const ExperimentConfig& config, int strategy_index);

// Writes summary.csv + curves.csv (CSV) or results.json (JSON) under `dir`.
// Deterministic bytes: same inputs give identical files. Returns the paths.
std::vector<std::string> export_results(const ExperimentConfig& config,
                                        std::span<const TaggedResult> results,
                                        const ComparisonTable& table,
                                        OutputFormat format, const std::string& dir);

// Shortest round-trip decimal form (std::to_chars).
std::string format_double(double value);

} // namespace gsalab::harness
