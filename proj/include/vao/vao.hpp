#pragma once

// Victoria Amazonica optimizer: a plant population where weaker plants are
// pulled toward stronger ones, with drawback attenuation, damped hybrid
// mutation and an elitist alpha.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vao/common.hpp"

namespace vao {

/// One candidate solution together with its life-cycle attributes.
struct Plant {
    std::vector<double> position;
    double expansion = 55.0;          // in [10, 100]; larger is stronger
    double intra_competition = 20.0;  // in [10, 30]; resampled every generation
    double drawback_omega = 0.2;      // in [0.1, 0.3]
    double drawback_psi = 0.2;        // in [0.1, 0.3]
    double cost = 0.0;
    std::size_t id = 0;               // index at creation; sort tie-breaker
};

struct VaoParams {
    std::size_t population_size = 20;
    std::size_t iterations = 500;
    double mutation_rate = 0.2;
    double mutation_damping = 0.99;
    /// Mutation standard deviation as a fraction of each dimension's range.
    double mutation_sigma_frac = 0.1;
    double attraction_base = 1.0;
    Interval expansion_range{10.0, 100.0};
    Interval lambda_range{10.0, 30.0};
    Interval drawback_range{0.1, 0.3};
    std::uint64_t seed = 0;

    /// Throws ConfigError when a field is out of its documented domain.
    void validate() const;

    /// Mutation probability per dimension at iteration t (t = 0 for the first).
    [[nodiscard]] double mutation_rate_at(std::size_t t) const;
};

struct StepStats {
    std::size_t evaluations = 0;
    std::size_t rejected_moves = 0;
};

std::vector<Plant> init_population(const Objective& objective, const SearchSpace& space,
                                   const VaoParams& params, Rng& rng,
                                   std::size_t* evaluations = nullptr);

/// Linear map of cost onto the expansion range: best gets the top, worst the bottom.
/// Plants with a non-finite cost get the bottom of the range.
void update_expansion(std::span<Plant> plants, Interval expansion_range = {10.0, 100.0});

/// Fraction of the gap to `target` that `mover` covers for a uniform draw u.
[[nodiscard]] double attraction_step(const Plant& mover, const Plant& target, double u,
                                     double attraction_base,
                                     double expansion_ceiling = 100.0);

/// Whether plant `mover` is drawn toward `target` this generation.
[[nodiscard]] inline bool is_attracted(const Plant& mover, const Plant& target) {
    return target.expansion > mover.expansion ||
           target.intra_competition > mover.intra_competition;
}

/// Per-dimension Gaussian perturbation applied with probability `rate`, then clamped.
void hybrid_mutation(std::span<double> position, const SearchSpace& space, double rate,
                     double sigma_frac, Rng& rng);

/// One generation of pairwise movement and mutation. Re-evaluates moved plants,
/// reverts moves that produce non-finite costs and resamples every λ.
StepStats intra_competition_step(std::vector<Plant>& plants, const Objective& objective,
                                 const SearchSpace& space, const VaoParams& params,
                                 std::size_t iteration, Rng& rng);

/// Stable ascending sort on cost; ties keep creation order.
void sort_by_cost(std::vector<Plant>& plants);

class VaoOptimizer {
public:
    explicit VaoOptimizer(VaoParams params);

    [[nodiscard]] const VaoParams& params() const { return params_; }

    /// Full run seeded from params().seed.
    [[nodiscard]] RunResult optimize(const Objective& objective, const SearchSpace& space,
                                     const IterationCallback& on_iteration = {}) const;

    /// Full run with an explicit generator; `seed` is only recorded.
    RunResult optimize(const Objective& objective, const SearchSpace& space, Rng& rng,
                       const IterationCallback& on_iteration = {}) const;

    /// Like optimize() but also hands every generation's population to `observer`.
    RunResult optimize_observed(
        const Objective& objective, const SearchSpace& space, Rng& rng,
        const std::function<void(std::size_t, const std::vector<Plant>&)>& observer) const;

private:
    VaoParams params_;
};

/// Convenience wrapper: VaoOptimizer(params).optimize(objective, space).
RunResult vao_optimize(const Objective& objective, const SearchSpace& space,
                       const VaoParams& params);

}  // namespace vao
