#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsalab/types.hpp"

namespace gsalab::benchmarks {

// A registered test function: closed form, canonical box, known optimum.
struct BenchmarkSpec {
    std::string id;
    int default_dimension = 30;
    int min_dimension = 1;
    double lower = 0;  // same box in every dimension
    double upper = 0;
    double optimizer_coordinate = 0;     // every coordinate of the minimizer
    double optimum_base = 0;             // per-dimension term if scaling, else the value
    bool optimum_scales_with_dimension = false;

    double optimum_value(int dimension) const {
        return optimum_scales_with_dimension ? optimum_base * dimension : optimum_base;
    }
    std::vector<double> optimizer(int dimension) const {
        return std::vector<double>(dimension, optimizer_coordinate);
    }
};

// Closed-form value at x. Total on the reals (x need not be inside the box).
// Unknown id -> RegistryError; x shorter than the function's minimum
// dimension -> ContractError.
double evaluate(std::string_view id, std::span<const double> x);

const BenchmarkSpec& function_spec(std::string_view id);

// Sorted ascending.
std::vector<std::string> list_functions();

// Minimization ProblemSpec bound to the registered closed form and box.
ProblemSpec make_problem(std::string_view id, int dimension);

} // namespace gsalab::benchmarks
