#pragma once

// Benchmark landscapes with registered bounds and literature optima.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vao/common.hpp"

namespace vao::functions {

enum class Arity {
    any,            // D >= min_dimension
    fixed_two,      // D == 2
    multiple_of_4,  // D % 4 == 0
};

struct KnownOptimum {
    /// Every listed point attains `value`.
    std::vector<std::vector<double>> points;
    double value = 0.0;
    /// Oracle tolerance: 1e-6 for closed forms, 1e-4 for numeric literals.
    double tolerance = 1e-6;
};

struct TestFunction {
    std::string name;
    Arity arity = Arity::any;
    std::size_t min_dimension = 1;
    /// One entry applies to all dimensions; otherwise one entry per dimension.
    std::vector<Interval> default_bounds;
    bool symmetric = false;  // f(x) == f(-x)
    std::function<double(std::span<const double>)> eval;
    /// Optimum for a given dimension, if the literature defines one.
    std::function<std::optional<KnownOptimum>(std::size_t)> optimum;

    [[nodiscard]] bool accepts_dimension(std::size_t dim) const;
    /// Default search box for `dim` dimensions; throws DimensionError if not accepted.
    [[nodiscard]] SearchSpace default_space(std::size_t dim) const;
    /// Dimension used when a caller does not choose one.
    [[nodiscard]] std::size_t natural_dimension() const;
};

/// All 24 functions, in table order.
const std::vector<TestFunction>& registry();

/// Throws ConfigError naming the valid identifiers when `name` is unknown.
const TestFunction& lookup(std::string_view name);

/// Throws DimensionError when x has an unsupported length.
double evaluate(std::string_view name, std::span<const double> x);

std::optional<KnownOptimum> known_optimum(std::string_view name, std::size_t dim = 2);

/// Objective wrapper that checks dimension once at construction.
Objective make_objective(std::string_view name, std::size_t dim);

/// Comma-separated list of registered names.
std::string valid_names();

}  // namespace vao::functions
