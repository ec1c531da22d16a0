#pragma once

// Reference optimizers sharing the VAO run contract: seeded, elitist,
// monotone best-cost trace, positions clamped to the search box.

#include <cstddef>
#include <cstdint>

#include "vao/common.hpp"

namespace vao::baselines {

struct PsoParams {
    std::size_t population_size = 20;
    std::size_t iterations = 500;
    double inertia_weight = 1.0;
    double inertia_damping = 0.99;
    double personal_coefficient = 1.5;
    double global_coefficient = 2.0;
    /// Velocity limit per dimension as a fraction of that dimension's range.
    double velocity_clamp_frac = 0.2;
    std::uint64_t seed = 0;

    void validate() const;
};

enum class DeStrategy { rand_1_bin };

struct DeParams {
    std::size_t population_size = 20;
    std::size_t iterations = 500;
    double differential_weight = 0.5;
    double crossover_rate = 0.9;
    DeStrategy strategy = DeStrategy::rand_1_bin;
    std::uint64_t seed = 0;

    /// rand/1 needs the target plus three distinct donors, so at least 4 members.
    void validate() const;
};

/// Global-best PSO with linearly damped inertia.
RunResult pso_optimize(const Objective& objective, const SearchSpace& space,
                       const PsoParams& params, const IterationCallback& on_iteration = {});

/// DE/rand/1/bin with generational replacement (trial wins ties).
RunResult de_optimize(const Objective& objective, const SearchSpace& space,
                      const DeParams& params, const IterationCallback& on_iteration = {});

/// Uniform sampling in batches of `batch` points: one initial batch plus one per
/// iteration, the same evaluation budget as the population methods.
RunResult random_search(const Objective& objective, const SearchSpace& space, std::size_t batch,
                        std::size_t iterations, std::uint64_t seed,
                        const IterationCallback& on_iteration = {});

}  // namespace vao::baselines
