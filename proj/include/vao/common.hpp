#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vao {

using Rng = std::mt19937_64;

/// Raised for invalid optimizer parameters, bounds or instance data.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a vector has the wrong length for the callee.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Closed real interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] bool contains(double v) const { return v >= lo && v <= hi; }
    [[nodiscard]] double width() const { return hi - lo; }
};

/// Box-bounded search domain.
class SearchSpace {
public:
    SearchSpace(std::vector<double> lower, std::vector<double> upper);

    /// Same bounds on every dimension.
    static SearchSpace uniform(std::size_t dimension, double lower, double upper);

    [[nodiscard]] std::size_t dimension() const { return lower_.size(); }
    [[nodiscard]] const std::vector<double>& lower() const { return lower_; }
    [[nodiscard]] const std::vector<double>& upper() const { return upper_; }
    [[nodiscard]] double range(std::size_t d) const { return upper_[d] - lower_[d]; }

    void clamp(std::span<double> x) const;
    [[nodiscard]] bool contains(std::span<const double> x) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Named real-vector cost function (minimization).
struct Objective {
    std::string name;
    std::function<double(std::span<const double>)> fn;

    double operator()(std::span<const double> x) const { return fn(x); }
};

enum class RunStatus { ok, no_finite_value };

struct RunResult {
    RunStatus status = RunStatus::ok;
    /// Best-so-far cost after each iteration; size equals the iteration count.
    std::vector<double> best_cost_trace;
    double initial_best_cost = 0.0;
    std::vector<double> alpha_position;
    double alpha_cost = 0.0;
    std::uint64_t seed = 0;
    std::size_t evaluations = 0;
    /// Moves discarded because the objective returned a non-finite value.
    std::size_t rejected_moves = 0;
    double elapsed_seconds = 0.0;
};

/// Shortest decimal text that parses back to exactly `v` ("inf", "-inf", "nan" otherwise).
std::string format_number(double v);

/// Per-iteration observer. Receives the iteration index and current best cost.
using IterationCallback = std::function<void(std::size_t, double)>;

}  // namespace vao
