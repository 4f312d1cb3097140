#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsalab/benchmarks.hpp"
#include "gsalab/harness.hpp"

namespace {

using gsalab::harness::ExperimentConfig;

// One JSON object per error line on stderr; exit code is nonzero.
int fail(const std::string& category, const std::string& message,
         const nlohmann::json& extra = nlohmann::json::object()) {
    nlohmann::json doc = extra;
    doc["error"] = category;
    doc["message"] = message;
    std::cerr << doc.dump() << "\n";
    return 1;
}

std::vector<double> parse_point(const std::string& text) {
    std::vector<double> point;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        double value = 0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            throw gsalab::ConfigError("point", "invalid --point entry '" + token + "'");
        }
        if (used != token.size()) {
            throw gsalab::ConfigError("point", "invalid --point entry '" + token + "'");
        }
        point.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return point;
}

void print_summary(const gsalab::harness::ComparisonTable& table) {
    for (const auto& row : table.rows) {
        std::printf("%-12s d=%-3d %-20s mean=%-12.6g median=%-12.6g best=%-12.6g "
                    "mean_g0=%-10.6g w/t/l=%d/%d/%d\n",
                    row.function.c_str(), row.dimension, row.strategy.c_str(), row.stats.mean,
                    row.stats.median, row.stats.best, row.mean_g0, row.wins, row.ties, row.losses);
    }
}

int run_command(const std::string& config_path, const std::string& out_dir,
                const std::string& format, const std::string& exec, bool seed_given,
                std::uint64_t seed) {
    ExperimentConfig config = gsalab::harness::load_config(config_path);
    if (seed_given) config.base_seed = seed;
    if (!out_dir.empty()) config.out_path = out_dir;
    if (format == "csv") config.format = gsalab::harness::OutputFormat::Csv;
    if (format == "json") config.format = gsalab::harness::OutputFormat::Json;
    const gsalab::ExecMode mode =
        exec == "omp" ? gsalab::ExecMode::OpenMP : gsalab::ExecMode::Serial;

    const auto results = gsalab::harness::run_experiment(config, mode);
    const auto table = gsalab::harness::compare_strategies(config, results);
    const auto paths =
        gsalab::harness::export_results(config, results, table, config.format, config.out_path);

    print_summary(table);
    for (const auto& path : paths) std::printf("wrote %s\n", path.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gsa-lab: gravitational search runs, G0 strategies, benchmark experiments"};
    app.require_subcommand(1);

    std::string config_path, out_dir, format, exec = "serial";
    std::uint64_t seed = 0;
    auto* run_cmd = app.add_subcommand("run", "Execute the experiment described by a config file");
    run_cmd->add_option("--config", config_path, "Experiment config (JSON)")->required();
    auto* seed_opt = run_cmd->add_option("--seed", seed, "Override base_seed");
    run_cmd->add_option("--out", out_dir, "Override the output directory");
    run_cmd->add_option("--format", format, "Override the output format")
        ->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_option("--exec", exec, "Kernel execution mode (default serial)")
        ->check(CLI::IsMember({"serial", "omp"}));

    app.add_subcommand("list-functions", "Print the registered benchmark function ids");

    std::string function_id, point_text;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a benchmark function at a point");
    eval_cmd->add_option("--function", function_id, "Function id")->required();
    eval_cmd->add_option("--point", point_text, "Comma-separated coordinates")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        fail("usage", e.what());
        return 2;
    }

    try {
        if (run_cmd->parsed()) {
            return run_command(config_path, out_dir, format, exec, seed_opt->count() > 0, seed);
        }
        if (eval_cmd->parsed()) {
            const double value = gsalab::benchmarks::evaluate(function_id, parse_point(point_text));
            std::printf("%s\n", gsalab::harness::format_double(value).c_str());
            return 0;
        }
        for (const auto& id : gsalab::benchmarks::list_functions()) {
            std::printf("%s\n", id.c_str());
        }
        return 0;
    } catch (const gsalab::ConfigError& e) {
        return fail("config", e.what(), {{"key", e.key}});
    } catch (const gsalab::RegistryError& e) {
        return fail("registry", e.what());
    } catch (const gsalab::DomainError& e) {
        return fail("domain", e.what());
    } catch (const gsalab::RunAbortError& e) {
        return fail("run_abort", e.what(), {{"agent", e.agent}, {"iteration", e.iteration}});
    } catch (const gsalab::IoError& e) {
        return fail("io", e.what(), {{"path", e.path}});
    } catch (const gsalab::ContractError& e) {
        return fail("contract", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
}
