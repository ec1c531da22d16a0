#include "vao/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

namespace vao::baselines {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> uniform_point(const SearchSpace& space, Rng& rng) {
    std::vector<double> x(space.dimension());
    for (std::size_t d = 0; d < x.size(); ++d) {
        x[d] = std::uniform_real_distribution<double>(space.lower()[d], space.upper()[d])(rng);
    }
    space.clamp(x);
    return x;
}

// Counts calls and maps non-finite values to +inf.
struct CountedObjective {
    const Objective& objective;
    RunResult& result;

    double operator()(std::span<const double> x) const {
        ++result.evaluations;
        const double c = objective(x);
        if (std::isfinite(c)) return c;
        ++result.rejected_moves;
        return kInf;
    }
};

bool fail_if_nonfinite(RunResult& result, double best, std::vector<double> position) {
    if (std::isfinite(best)) return false;
    result.status = RunStatus::no_finite_value;
    result.alpha_cost = kInf;
    result.initial_best_cost = kInf;
    result.alpha_position = std::move(position);
    return true;
}

}  // namespace

void PsoParams::validate() const {
    if (population_size < 1) throw ConfigError("population_size must be at least 1");
    if (!(inertia_weight >= 0.0)) throw ConfigError("inertia_weight must be non-negative");
    if (!(inertia_damping > 0.0 && inertia_damping <= 1.0)) {
        throw ConfigError("inertia_damping must lie in (0, 1]");
    }
    if (!(personal_coefficient > 0.0) || !(global_coefficient > 0.0)) {
        throw ConfigError("learning coefficients must be positive");
    }
    if (!(velocity_clamp_frac > 0.0)) throw ConfigError("velocity_clamp_frac must be positive");
}

void DeParams::validate() const {
    if (population_size < 4) {
        throw ConfigError("DE rand/1 requires a population of at least 4");
    }
    if (!(differential_weight > 0.0 && differential_weight <= 2.0)) {
        throw ConfigError("differential_weight must lie in (0, 2]");
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
        throw ConfigError("crossover_rate must lie in [0, 1]");
    }
}

RunResult pso_optimize(const Objective& objective, const SearchSpace& space,
                       const PsoParams& params, const IterationCallback& on_iteration) {
    params.validate();
    const auto started = Clock::now();
    RunResult result;
    result.seed = params.seed;
    Rng rng(params.seed);
    CountedObjective eval{objective, result};

    const std::size_t n = params.population_size;
    const std::size_t dim = space.dimension();
    std::vector<double> vmax(dim);
    for (std::size_t d = 0; d < dim; ++d) vmax[d] = params.velocity_clamp_frac * space.range(d);

    std::vector<std::vector<double>> x(n);
    std::vector<std::vector<double>> v(n, std::vector<double>(dim, 0.0));
    std::vector<std::vector<double>> pbest(n);
    std::vector<double> pbest_cost(n);
    std::vector<double> gbest;
    double gbest_cost = kInf;

    for (std::size_t i = 0; i < n; ++i) {
        x[i] = uniform_point(space, rng);
        pbest[i] = x[i];
        pbest_cost[i] = eval(x[i]);
        if (gbest.empty() || pbest_cost[i] < gbest_cost) {
            gbest_cost = pbest_cost[i];
            gbest = x[i];
        }
    }
    if (fail_if_nonfinite(result, gbest_cost, gbest)) {
        result.elapsed_seconds = seconds_since(started);
        return result;
    }
    result.initial_best_cost = gbest_cost;

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double w = params.inertia_weight;
    result.best_cost_trace.reserve(params.iterations);
    for (std::size_t t = 0; t < params.iterations; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < dim; ++d) {
                const double r1 = unit(rng);
                const double r2 = unit(rng);
                double vel = w * v[i][d] +
                             params.personal_coefficient * r1 * (pbest[i][d] - x[i][d]) +
                             params.global_coefficient * r2 * (gbest[d] - x[i][d]);
                vel = std::clamp(vel, -vmax[d], vmax[d]);
                double pos = x[i][d] + vel;
                if (pos < space.lower()[d] || pos > space.upper()[d]) {
                    pos = std::clamp(pos, space.lower()[d], space.upper()[d]);
                    vel = -vel;
                }
                v[i][d] = vel;
                x[i][d] = pos;
            }
            const double c = eval(x[i]);
            if (c < pbest_cost[i]) {
                pbest_cost[i] = c;
                pbest[i] = x[i];
                if (c < gbest_cost) {
                    gbest_cost = c;
                    gbest = x[i];
                }
            }
        }
        w *= params.inertia_damping;
        result.best_cost_trace.push_back(gbest_cost);
        if (on_iteration) on_iteration(t, gbest_cost);
    }

    result.alpha_position = std::move(gbest);
    result.alpha_cost = gbest_cost;
    result.elapsed_seconds = seconds_since(started);
    return result;
}

RunResult de_optimize(const Objective& objective, const SearchSpace& space,
                      const DeParams& params, const IterationCallback& on_iteration) {
    params.validate();
    const auto started = Clock::now();
    RunResult result;
    result.seed = params.seed;
    Rng rng(params.seed);
    CountedObjective eval{objective, result};

    const std::size_t n = params.population_size;
    const std::size_t dim = space.dimension();
    std::vector<std::vector<double>> pop(n);
    std::vector<double> cost(n);
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        pop[i] = uniform_point(space, rng);
        cost[i] = eval(pop[i]);
        if (cost[i] < cost[best]) best = i;
    }
    if (fail_if_nonfinite(result, cost[best], pop[best])) {
        result.elapsed_seconds = seconds_since(started);
        return result;
    }
    result.initial_best_cost = cost[best];

    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_dim(0, dim - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<double>> next = pop;
    std::vector<double> next_cost = cost;
    std::vector<double> trial(dim);

    result.best_cost_trace.reserve(params.iterations);
    for (std::size_t t = 0; t < params.iterations; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r1;
            std::size_t r2;
            std::size_t r3;
            do { r1 = pick(rng); } while (r1 == i);
            do { r2 = pick(rng); } while (r2 == i || r2 == r1);
            do { r3 = pick(rng); } while (r3 == i || r3 == r1 || r3 == r2);
            const std::size_t forced = pick_dim(rng);
            for (std::size_t d = 0; d < dim; ++d) {
                if (d == forced || unit(rng) < params.crossover_rate) {
                    trial[d] = pop[r1][d] + params.differential_weight * (pop[r2][d] - pop[r3][d]);
                } else {
                    trial[d] = pop[i][d];
                }
            }
            space.clamp(trial);
            const double c = eval(trial);
            if (c <= cost[i]) {
                next[i] = trial;
                next_cost[i] = c;
            } else {
                next[i] = pop[i];
                next_cost[i] = cost[i];
            }
        }
        pop.swap(next);
        cost.swap(next_cost);
        for (std::size_t i = 0; i < n; ++i) {
            if (cost[i] < cost[best]) best = i;
        }
        result.best_cost_trace.push_back(cost[best]);
        if (on_iteration) on_iteration(t, cost[best]);
    }

    result.alpha_position = pop[best];
    result.alpha_cost = cost[best];
    result.elapsed_seconds = seconds_since(started);
    return result;
}

RunResult random_search(const Objective& objective, const SearchSpace& space, std::size_t batch,
                        std::size_t iterations, std::uint64_t seed,
                        const IterationCallback& on_iteration) {
    if (batch < 1) throw ConfigError("random search batch must be at least 1");
    const auto started = Clock::now();
    RunResult result;
    result.seed = seed;
    Rng rng(seed);
    CountedObjective eval{objective, result};

    std::vector<double> best;
    double best_cost = kInf;
    auto draw_batch = [&] {
        for (std::size_t k = 0; k < batch; ++k) {
            std::vector<double> x = uniform_point(space, rng);
            const double c = eval(x);
            if (best.empty() || c < best_cost) {
                best_cost = c;
                best = std::move(x);
            }
        }
    };

    draw_batch();
    if (fail_if_nonfinite(result, best_cost, best)) {
        result.elapsed_seconds = seconds_since(started);
        return result;
    }
    result.initial_best_cost = best_cost;
    result.best_cost_trace.reserve(iterations);
    for (std::size_t t = 0; t < iterations; ++t) {
        draw_batch();
        result.best_cost_trace.push_back(best_cost);
        if (on_iteration) on_iteration(t, best_cost);
    }
    result.alpha_position = std::move(best);
    result.alpha_cost = best_cost;
    result.elapsed_seconds = seconds_since(started);
    return result;
}

}  // namespace vao::baselines
