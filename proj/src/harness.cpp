#include "gsalab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsalab/benchmarks.hpp"

namespace gsalab::harness {

using nlohmann::json;

namespace {

constexpr double kWinMargin = 1e-12;

[[noreturn]] void bad_type(const std::string& key, const char* expected) {
    throw ConfigError(key, "'" + key + "' must be " + expected);
}

void reject_unknown_keys(const json& obj, const std::string& prefix,
                         std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : obj.items()) {
        bool found = false;
        for (auto k : known) found = found || (key == k);
        if (!found) {
            const std::string path = prefix.empty() ? key : prefix + "." + key;
            throw ConfigError(path, "unknown key '" + path + "'");
        }
    }
}

int get_positive_int(const json& obj, const std::string& key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) bad_type(key, "a positive integer");
    return v.get<int>();
}

double get_positive_real(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number() || !(v.get<double>() > 0) || !std::isfinite(v.get<double>())) {
        bad_type(key, "a positive finite number");
    }
    return v.get<double>();
}

StrategySpec parse_strategy(const json& entry, int index) {
    const std::string where = "strategies[" + std::to_string(index) + "]";
    if (!entry.is_object()) bad_type(where, "an object");
    reject_unknown_keys(entry, where, {"kind", "params"});
    if (!entry.contains("kind") || !entry.at("kind").is_string()) {
        throw ConfigError("g0.kind", "missing or non-string g0.kind in " + where);
    }
    const std::string kind_name = entry.at("kind").get<std::string>();
    const auto kind = g0_kind_from_string(kind_name);
    if (!kind) {
        throw ConfigError("g0.kind", "unknown g0.kind '" + kind_name + "' in " + where);
    }
    StrategySpec spec;
    spec.kind = *kind;
    spec.params.clear();
    if (entry.contains("params")) {
        const json& params = entry.at("params");
        if (!params.is_object()) bad_type(where + ".params", "an object of numbers");
        for (const auto& [key, value] : params.items()) {
            if (!value.is_number()) bad_type("g0.params." + key, "a number");
            spec.params[key] = value.get<double>();
        }
    }
    validate(spec);  // unknown/missing params -> ConfigError naming g0.params.<key>
    return spec;
}

ExperimentConfig parse_json(const json& root) {
    if (!root.is_object()) throw ConfigError("config", "top-level value must be an object");
    reject_unknown_keys(root, "",
                        {"problems", "gsa", "strategies", "runs", "base_seed", "pairing", "output"});

    ExperimentConfig config;

    if (!root.contains("problems") || !root.at("problems").is_array() ||
        root.at("problems").empty()) {
        throw ConfigError("problems", "'problems' must be a non-empty array");
    }
    int index = 0;
    for (const json& entry : root.at("problems")) {
        const std::string where = "problems[" + std::to_string(index) + "]";
        if (!entry.is_object()) bad_type(where, "an object");
        reject_unknown_keys(entry, where, {"function", "dimension"});
        if (!entry.contains("function") || !entry.at("function").is_string()) {
            throw ConfigError(where + ".function", "missing or non-string function id");
        }
        ProblemRef ref;
        ref.function = entry.at("function").get<std::string>();
        const benchmarks::BenchmarkSpec* spec = nullptr;
        try {
            spec = &benchmarks::function_spec(ref.function);
        } catch (const RegistryError& e) {
            throw ConfigError(where + ".function", e.what());
        }
        ref.dimension = get_positive_int(entry, "dimension", spec->default_dimension);
        if (ref.dimension < spec->min_dimension) {
            throw ConfigError(where + ".dimension",
                              "function '" + ref.function + "' needs dimension >= " +
                                  std::to_string(spec->min_dimension));
        }
        config.problems.push_back(std::move(ref));
        ++index;
    }

    if (root.contains("gsa")) {
        const json& gsa = root.at("gsa");
        if (!gsa.is_object()) bad_type("gsa", "an object");
        reject_unknown_keys(gsa, "gsa",
                            {"population_size", "iterations", "alpha", "epsilon", "boundary"});
        config.gsa.population_size = get_positive_int(gsa, "population_size", 50);
        config.gsa.iterations = get_positive_int(gsa, "iterations", 1000);
        config.gsa.alpha = get_positive_real(gsa, "alpha", 20.0);
        config.gsa.epsilon = get_positive_real(gsa, "epsilon", 1e-10);
        if (gsa.contains("boundary")) {
            if (!gsa.at("boundary").is_string() || gsa.at("boundary").get<std::string>() != "clamp") {
                throw ConfigError("gsa.boundary", "'gsa.boundary' must be \"clamp\"");
            }
        }
    }
    if (config.gsa.population_size < 2) {
        throw ConfigError("gsa.population_size", "gsa.population_size must be >= 2");
    }

    if (!root.contains("strategies") || !root.at("strategies").is_array() ||
        root.at("strategies").empty()) {
        throw ConfigError("strategies", "'strategies' must be a non-empty array");
    }
    index = 0;
    for (const json& entry : root.at("strategies")) {
        config.strategies.push_back(parse_strategy(entry, index));
        ++index;
    }

    config.runs = get_positive_int(root, "runs", 1);

    if (root.contains("base_seed")) {
        const json& v = root.at("base_seed");
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
            bad_type("base_seed", "an unsigned 64-bit integer");
        }
        config.base_seed = v.get<std::uint64_t>();
    }

    if (root.contains("pairing")) {
        const json& v = root.at("pairing");
        const std::string name = v.is_string() ? v.get<std::string>() : "";
        if (name == "paired") config.pairing = Pairing::Paired;
        else if (name == "independent") config.pairing = Pairing::Independent;
        else throw ConfigError("pairing", "'pairing' must be \"paired\" or \"independent\"");
    }

    if (root.contains("output")) {
        const json& out = root.at("output");
        if (!out.is_object()) bad_type("output", "an object");
        reject_unknown_keys(out, "output", {"path", "format"});
        if (out.contains("path")) {
            if (!out.at("path").is_string()) bad_type("output.path", "a string");
            config.out_path = out.at("path").get<std::string>();
        }
        if (out.contains("format")) {
            const std::string name =
                out.at("format").is_string() ? out.at("format").get<std::string>() : "";
            if (name == "csv") config.format = OutputFormat::Csv;
            else if (name == "json") config.format = OutputFormat::Json;
            else throw ConfigError("output.format", "'output.format' must be \"csv\" or \"json\"");
        }
    }

    // Derive output labels once so exports are stable.
    for (int s = 0; s < static_cast<int>(config.strategies.size()); ++s) {
        config.strategy_labels.push_back(strategy_label(config, s));
    }
    return config;
}

int worker_count() {
    const char* env = std::getenv("GSA_LAB_WORKERS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) {
        throw ConfigError("GSA_LAB_WORKERS",
                          "GSA_LAB_WORKERS must be a positive integer, got '" + std::string(env) +
                              "'");
    }
    return static_cast<int>(value);
}

} // namespace

ExperimentConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("parse error: ") + e.what());
    }
    return parse_json(root);
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string strategy_label(const ExperimentConfig& config, int strategy_index) {
    if (strategy_index < static_cast<int>(config.strategy_labels.size())) {
        return config.strategy_labels[strategy_index];
    }
    const std::string kind = to_string(config.strategies[strategy_index].kind);
    int occurrences = 0;
    for (const auto& s : config.strategies) occurrences += (s.kind == config.strategies[strategy_index].kind);
    return occurrences > 1 ? kind + "#" + std::to_string(strategy_index) : kind;
}

std::uint64_t run_seed(const ExperimentConfig& config, int problem_index, int strategy_index,
                       int repetition) {
    std::uint64_t seed = mix_seed(config.base_seed, static_cast<std::uint64_t>(problem_index));
    if (config.pairing == Pairing::Independent) {
        seed = mix_seed(seed, static_cast<std::uint64_t>(strategy_index));
    }
    return mix_seed(seed, static_cast<std::uint64_t>(repetition));
}

std::vector<TaggedResult> run_experiment(const ExperimentConfig& config, ExecMode mode) {
    if (config.problems.empty()) throw ConfigError("problems", "'problems' must be non-empty");
    if (config.strategies.empty()) throw ConfigError("strategies", "'strategies' must be non-empty");
    if (config.runs < 1) throw ConfigError("runs", "'runs' must be >= 1");
    for (const auto& strategy : config.strategies) validate(strategy);

    const int problems = static_cast<int>(config.problems.size());
    const int strategies = static_cast<int>(config.strategies.size());
    const int repetitions = config.runs;
    const int total = problems * strategies * repetitions;
    const int workers = worker_count();

    std::vector<TaggedResult> results(total);
    int failed_index = total;  // lowest failing cell wins, so errors are deterministic
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic) num_threads(workers) if (workers > 1)
    for (int index = 0; index < total; ++index) {
        try {
            const int p = index / (strategies * repetitions);
            const int s = (index / repetitions) % strategies;
            const int r = index % repetitions;

            GsaConfig gsa = config.gsa;
            gsa.g0 = config.strategies[s];
            gsa.seed = run_seed(config, p, s, r);
            const ProblemSpec problem =
                benchmarks::make_problem(config.problems[p].function, config.problems[p].dimension);

            RunOptions options;
            options.mode = mode;
            results[index] = TaggedResult{p, s, r, run(problem, gsa, options)};
        } catch (...) {
#pragma omp critical(gsalab_harness_error)
            if (index < failed_index) {
                failed_index = index;
                error = std::current_exception();
            }
        }
    }

    if (error) {
        const int p = failed_index / (strategies * repetitions);
        const int s = (failed_index / repetitions) % strategies;
        const int r = failed_index % repetitions;
        try {
            std::rethrow_exception(error);
        } catch (const RunAbortError& e) {
            throw RunAbortError(e.agent, e.iteration,
                                "cell (function=" + config.problems[p].function + ", strategy=" +
                                    strategy_label(config, s) + ", repetition=" +
                                    std::to_string(r) + "): " + e.what());
        }
        // non-run-abort errors (config/registry) carry enough context already
    }
    return results;
}

SummaryStats summarize(std::span<const double> finals) {
    if (finals.empty()) throw ContractError("summarize needs a non-empty sample");
    const int n = static_cast<int>(finals.size());

    double sum = 0.0;
    for (double v : finals) sum += v;
    const double mean = sum / n;

    double variance = 0.0;
    for (double v : finals) variance += (v - mean) * (v - mean);
    variance /= n;  // population denominator

    std::vector<double> sorted(finals.begin(), finals.end());
    std::sort(sorted.begin(), sorted.end());
    const double median = (n % 2 == 1) ? sorted[n / 2]
                                       : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;

    return SummaryStats{mean, std::sqrt(variance), median, sorted.front(), sorted.back(), n};
}

ComparisonTable compare_strategies(const ExperimentConfig& config,
                                   std::span<const TaggedResult> results) {
    const int problems = static_cast<int>(config.problems.size());
    const int strategies = static_cast<int>(config.strategies.size());
    const int repetitions = config.runs;

    std::vector<const RunResult*> cell(
        static_cast<std::size_t>(problems) * strategies * repetitions, nullptr);
    const auto at = [&](int p, int s, int r) -> const RunResult*& {
        return cell[(static_cast<std::size_t>(p) * strategies + s) * repetitions + r];
    };
    for (const TaggedResult& tagged : results) {
        if (tagged.problem_index < 0 || tagged.problem_index >= problems ||
            tagged.strategy_index < 0 || tagged.strategy_index >= strategies ||
            tagged.repetition < 0 || tagged.repetition >= repetitions) {
            throw ContractError("result tag outside the experiment grid");
        }
        at(tagged.problem_index, tagged.strategy_index, tagged.repetition) = &tagged.result;
    }
    for (int p = 0; p < problems; ++p) {
        for (int s = 0; s < strategies; ++s) {
            for (int r = 0; r < repetitions; ++r) {
                if (at(p, s, r) == nullptr) {
                    throw ContractError("missing cell (problem " + std::to_string(p) +
                                        ", strategy " + std::to_string(s) + ", repetition " +
                                        std::to_string(r) + ")");
                }
            }
        }
    }

    if (config.pairing == Pairing::Paired) {
        for (int p = 0; p < problems; ++p) {
            for (int r = 0; r < repetitions; ++r) {
                const std::uint64_t seed = at(p, 0, r)->seed;
                for (int s = 1; s < strategies; ++s) {
                    if (at(p, s, r)->seed != seed) {
                        throw ContractError("seed pairing violated at (problem " +
                                            std::to_string(p) + ", repetition " +
                                            std::to_string(r) + ")");
                    }
                }
            }
        }
    }

    int baseline = 0;
    for (int s = 0; s < strategies; ++s) {
        if (config.strategies[s].kind == G0Kind::Fixed) {
            baseline = s;
            break;
        }
    }

    ComparisonTable table;
    table.baseline_strategy = baseline;
    for (int p = 0; p < problems; ++p) {
        for (int s = 0; s < strategies; ++s) {
            ComparisonRow row;
            row.function = config.problems[p].function;
            row.dimension = config.problems[p].dimension;
            row.strategy = strategy_label(config, s);

            std::vector<double> finals(repetitions);
            double g0_sum = 0.0;
            for (int r = 0; r < repetitions; ++r) {
                finals[r] = at(p, s, r)->best_fitness;
                g0_sum += at(p, s, r)->g0_used;
            }
            row.stats = summarize(finals);
            row.mean_g0 = g0_sum / repetitions;

            for (int r = 0; r < repetitions; ++r) {
                const double diff = finals[r] - at(p, baseline, r)->best_fitness;
                if (diff < -kWinMargin) ++row.wins;
                else if (diff > kWinMargin) ++row.losses;
                else ++row.ties;
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

} // namespace gsalab::harness
