#include <charconv>
#include <filesystem>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "gsalab/harness.hpp"

namespace gsalab::harness {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError(path, "write to '" + path + "' failed");
}

std::string summary_csv(const ComparisonTable& table) {
    std::string text = "function,dim,strategy,mean,std,median,best,worst,mean_g0,wins,ties,losses\n";
    for (const ComparisonRow& row : table.rows) {
        text += row.function;
        text += ',' + std::to_string(row.dimension);
        text += ',' + row.strategy;
        text += ',' + format_double(row.stats.mean);
        text += ',' + format_double(row.stats.std);
        text += ',' + format_double(row.stats.median);
        text += ',' + format_double(row.stats.best);
        text += ',' + format_double(row.stats.worst);
        text += ',' + format_double(row.mean_g0);
        text += ',' + std::to_string(row.wins);
        text += ',' + std::to_string(row.ties);
        text += ',' + std::to_string(row.losses);
        text += '\n';
    }
    return text;
}

std::string curves_csv(const ExperimentConfig& config, std::span<const TaggedResult> results) {
    std::string text = "function,dim,strategy,run,iteration,best_fitness,g_value\n";
    for (const TaggedResult& tagged : results) {
        const ProblemRef& problem = config.problems[tagged.problem_index];
        const std::string prefix = problem.function + ',' + std::to_string(problem.dimension) +
                                   ',' + strategy_label(config, tagged.strategy_index) + ',' +
                                   std::to_string(tagged.repetition) + ',';
        for (const IterationRecord& record : tagged.result.records) {
            text += prefix;
            text += std::to_string(record.iteration);
            text += ',' + format_double(record.best_fitness);
            text += ',' + format_double(record.g_value);
            text += '\n';
        }
    }
    return text;
}

std::string results_json(const ExperimentConfig& config, std::span<const TaggedResult> results,
                         const ComparisonTable& table) {
    ordered_json doc;
    doc["summary"] = ordered_json::array();
    for (const ComparisonRow& row : table.rows) {
        doc["summary"].push_back({{"function", row.function},
                                  {"dim", row.dimension},
                                  {"strategy", row.strategy},
                                  {"mean", row.stats.mean},
                                  {"std", row.stats.std},
                                  {"median", row.stats.median},
                                  {"best", row.stats.best},
                                  {"worst", row.stats.worst},
                                  {"mean_g0", row.mean_g0},
                                  {"wins", row.wins},
                                  {"ties", row.ties},
                                  {"losses", row.losses}});
    }
    doc["curves"] = ordered_json::array();
    for (const TaggedResult& tagged : results) {
        const ProblemRef& problem = config.problems[tagged.problem_index];
        for (const IterationRecord& record : tagged.result.records) {
            doc["curves"].push_back({{"function", problem.function},
                                     {"dim", problem.dimension},
                                     {"strategy", strategy_label(config, tagged.strategy_index)},
                                     {"run", tagged.repetition},
                                     {"iteration", record.iteration},
                                     {"best_fitness", record.best_fitness},
                                     {"g_value", record.g_value}});
        }
    }
    return doc.dump(2) + "\n";
}

} // namespace

std::vector<std::string> export_results(const ExperimentConfig& config,
                                        std::span<const TaggedResult> results,
                                        const ComparisonTable& table, OutputFormat format,
                                        const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError(dir, "cannot create output directory '" + dir + "': " + ec.message());

    std::vector<std::string> written;
    if (format == OutputFormat::Csv) {
        const std::string summary_path = (fs::path(dir) / "summary.csv").string();
        const std::string curves_path = (fs::path(dir) / "curves.csv").string();
        write_file(summary_path, summary_csv(table));
        write_file(curves_path, curves_csv(config, results));
        written = {summary_path, curves_path};
    } else {
        const std::string json_path = (fs::path(dir) / "results.json").string();
        write_file(json_path, results_json(config, results, table));
        written = {json_path};
    }
    return written;
}

} // namespace gsalab::harness
