#include "gsalab/benchmarks.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace gsalab::benchmarks {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sphere(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

double schwefel_222(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (double v : x) {
        const double a = std::abs(v);
        sum += a;
        prod *= a;
    }
    return sum + prod;
}

double rosenbrock(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        const double a = x[k + 1] - x[k] * x[k];
        const double b = x[k] - 1.0;
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double rastrigin(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
    return sum;
}

double ackley(std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double square_sum = 0.0, cos_sum = 0.0;
    for (double v : x) {
        square_sum += v * v;
        cos_sum += std::cos(kTwoPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(square_sum / d)) - std::exp(cos_sum / d) + 20.0 +
           std::numbers::e;
}

double griewank(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sum += x[k] * x[k] / 4000.0;
        prod *= std::cos(x[k] / std::sqrt(static_cast<double>(k + 1)));
    }
    return sum - prod + 1.0;
}

double schwefel_226(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * std::sin(std::sqrt(std::abs(v)));
    return -sum;
}

// Stationary point of x*sin(sqrt(x)) near 420.97 and its value, rounded to
// the nearest doubles.
constexpr double kSchwefelOptimizer = 420.96874635998205;
constexpr double kSchwefelOptimumPerDim = -418.9828872724337;

struct Entry {
    BenchmarkSpec spec;
    double (*fn)(std::span<const double>);
};

const std::map<std::string, Entry, std::less<>>& registry() {
    static const std::map<std::string, Entry, std::less<>> table = {
        {"ackley", {{"ackley", 30, 1, -32.0, 32.0, 0.0, 0.0, false}, &ackley}},
        {"griewank", {{"griewank", 30, 1, -600.0, 600.0, 0.0, 0.0, false}, &griewank}},
        {"rastrigin", {{"rastrigin", 30, 1, -5.12, 5.12, 0.0, 0.0, false}, &rastrigin}},
        {"rosenbrock", {{"rosenbrock", 30, 2, -30.0, 30.0, 1.0, 0.0, false}, &rosenbrock}},
        {"schwefel222", {{"schwefel222", 30, 1, -10.0, 10.0, 0.0, 0.0, false}, &schwefel_222}},
        {"schwefel226",
         {{"schwefel226", 30, 1, -500.0, 500.0, kSchwefelOptimizer, kSchwefelOptimumPerDim, true},
          &schwefel_226}},
        {"sphere", {{"sphere", 30, 1, -100.0, 100.0, 0.0, 0.0, false}, &sphere}},
    };
    return table;
}

const Entry& lookup(std::string_view id) {
    const auto it = registry().find(id);
    if (it == registry().end()) {
        throw RegistryError("unknown benchmark function '" + std::string(id) + "'");
    }
    return it->second;
}

} // namespace

double evaluate(std::string_view id, std::span<const double> x) {
    const Entry& entry = lookup(id);
    if (static_cast<int>(x.size()) < entry.spec.min_dimension) {
        throw ContractError("function '" + std::string(id) + "' needs dimension >= " +
                            std::to_string(entry.spec.min_dimension) + ", got " +
                            std::to_string(x.size()));
    }
    return entry.fn(x);
}

const BenchmarkSpec& function_spec(std::string_view id) { return lookup(id).spec; }

std::vector<std::string> list_functions() {
    std::vector<std::string> ids;
    ids.reserve(registry().size());
    for (const auto& [id, entry] : registry()) ids.push_back(id);  // map keys are sorted
    return ids;
}

ProblemSpec make_problem(std::string_view id, int dimension) {
    const Entry& entry = lookup(id);
    if (dimension < entry.spec.min_dimension) {
        throw ConfigError("problem.dimension",
                          "function '" + std::string(id) + "' needs dimension >= " +
                              std::to_string(entry.spec.min_dimension) + ", got " +
                              std::to_string(dimension));
    }
    ProblemSpec spec;
    spec.dimension = dimension;
    spec.lower.assign(dimension, entry.spec.lower);
    spec.upper.assign(dimension, entry.spec.upper);
    spec.objective = entry.fn;
    spec.sense = Sense::Minimize;
    return spec;
}

} // namespace gsalab::benchmarks
