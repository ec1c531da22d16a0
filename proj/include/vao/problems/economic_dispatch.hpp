#pragma once

// Economic load dispatch: split a power demand across generating units with
// quadratic fuel cost and quadratic (B-matrix) transmission loss.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "vao/common.hpp"

namespace vao::problems {

struct EdInstance {
    /// Fuel cost of unit i at output p: a[i]*p^2 + b[i]*p + c[i].
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;
    std::vector<double> p_min;  // MW
    std::vector<double> p_max;  // MW
    /// Loss coefficients in 1/MW; PL = p^T B p.
    std::vector<std::vector<double>> loss;
    double demand = 0.0;  // MW
    /// Weight on the squared balance error added to the fuel cost.
    double penalty_weight = 1e4;

    [[nodiscard]] std::size_t units() const { return a.size(); }
    /// Throws ConfigError on inconsistent sizes, empty boxes, infeasible demand or a
    /// loss matrix that is not symmetric positive semidefinite.
    void validate() const;
};

struct EdEvaluation {
    double cost = 0.0;       // fuel + penalty
    double fuel_cost = 0.0;
    double total_power = 0.0;  // PT
    double loss = 0.0;         // PL
    double error = 0.0;        // PT - PL - PD
};

/// The bundled six-unit system: limits and 1100 MW demand as published for the
/// benchmark, fuel and loss coefficients from the classic six-unit test system.
EdInstance ed_paper_instance();

EdEvaluation ed_objective(const EdInstance& instance, std::span<const double> p);

SearchSpace ed_space(const EdInstance& instance);
Objective ed_as_objective(const EdInstance& instance);

/// Line format: one "a b c pmin pmax" line per unit, then the n rows of B,
/// then "PD <value>" and optionally "penalty <value>". '#' starts a comment.
EdInstance parse_ed_instance(std::istream& in);
EdInstance load_ed_instance(const std::filesystem::path& path);
void write_ed_instance(std::ostream& out, const EdInstance& instance);

}  // namespace vao::problems
