#include "vao/vao.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace vao {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double finite_or_inf(double c) { return std::isfinite(c) ? c : kInf; }

void check_interval(const Interval& r, const char* name) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
        throw ConfigError(std::string(name) + " must be a nonempty finite interval");
    }
}

double sample(const Interval& r, Rng& rng) {
    if (r.lo == r.hi) return r.lo;
    return std::uniform_real_distribution<double>(r.lo, r.hi)(rng);
}

}  // namespace

void VaoParams::validate() const {
    if (population_size < 1) throw ConfigError("population_size must be at least 1");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        throw ConfigError("mutation_rate must lie in [0, 1]");
    }
    if (!(mutation_damping > 0.0 && mutation_damping <= 1.0)) {
        throw ConfigError("mutation_damping must lie in (0, 1]");
    }
    if (!(mutation_sigma_frac >= 0.0) || !std::isfinite(mutation_sigma_frac)) {
        throw ConfigError("mutation_sigma_frac must be finite and non-negative");
    }
    if (!(attraction_base > 0.0) || !std::isfinite(attraction_base)) {
        throw ConfigError("attraction_base must be finite and positive");
    }
    check_interval(expansion_range, "expansion_range");
    check_interval(lambda_range, "lambda_range");
    check_interval(drawback_range, "drawback_range");
    if (expansion_range.lo <= 0.0) throw ConfigError("expansion_range must be positive");
    if (drawback_range.lo < 0.0 || drawback_range.hi >= 1.0) {
        throw ConfigError("drawback_range must lie within [0, 1)");
    }
}

double VaoParams::mutation_rate_at(std::size_t t) const {
    return mutation_rate * std::pow(mutation_damping, static_cast<double>(t));
}

std::vector<Plant> init_population(const Objective& objective, const SearchSpace& space,
                                   const VaoParams& params, Rng& rng,
                                   std::size_t* evaluations) {
    if (params.population_size < 1) throw ConfigError("population_size must be at least 1");
    std::vector<Plant> plants(params.population_size);
    const std::size_t dim = space.dimension();
    for (std::size_t i = 0; i < plants.size(); ++i) {
        Plant& p = plants[i];
        p.id = i;
        p.position.resize(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            p.position[d] =
                std::uniform_real_distribution<double>(space.lower()[d], space.upper()[d])(rng);
        }
        // uniform_real_distribution is half-open but rounding can still land on hi
        space.clamp(p.position);
        p.expansion = sample(params.expansion_range, rng);
        p.intra_competition = sample(params.lambda_range, rng);
        p.drawback_omega = sample(params.drawback_range, rng);
        p.drawback_psi = sample(params.drawback_range, rng);
        p.cost = finite_or_inf(objective(p.position));
        if (evaluations) ++*evaluations;
    }
    return plants;
}

void update_expansion(std::span<Plant> plants, Interval expansion_range) {
    if (plants.empty()) return;
    double best = kInf;
    double worst = -kInf;
    for (const Plant& p : plants) {
        if (!std::isfinite(p.cost)) continue;
        best = std::min(best, p.cost);
        worst = std::max(worst, p.cost);
    }
    const double mid = 0.5 * (expansion_range.lo + expansion_range.hi);
    for (Plant& p : plants) {
        if (!std::isfinite(p.cost)) {
            p.expansion = expansion_range.lo;
        } else if (worst == best) {
            p.expansion = mid;
        } else {
            const double frac = (worst - p.cost) / (worst - best);
            p.expansion = std::clamp(expansion_range.lo + expansion_range.width() * frac,
                                     expansion_range.lo, expansion_range.hi);
        }
    }
}

double attraction_step(const Plant& mover, const Plant& target, double u,
                       double attraction_base, double expansion_ceiling) {
    return attraction_base * (target.expansion / expansion_ceiling) *
           (1.0 - mover.drawback_omega) * (1.0 - mover.drawback_psi) * u;
}

void hybrid_mutation(std::span<double> position, const SearchSpace& space, double rate,
                     double sigma_frac, Rng& rng) {
    if (position.size() != space.dimension()) {
        throw DimensionError("position length does not match search space dimension");
    }
    if (rate <= 0.0) return;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t d = 0; d < position.size(); ++d) {
        if (coin(rng) < rate) {
            position[d] += sigma_frac * space.range(d) * gauss(rng);
        }
    }
    space.clamp(position);
}

StepStats intra_competition_step(std::vector<Plant>& plants, const Objective& objective,
                                 const SearchSpace& space, const VaoParams& params,
                                 std::size_t iteration, Rng& rng) {
    StepStats stats;
    const double rate = params.mutation_rate_at(iteration);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> previous;

    // Movement targets are the positions at the start of the generation.
    std::vector<std::vector<double>> start_positions;
    start_positions.reserve(plants.size());
    for (const Plant& p : plants) start_positions.push_back(p.position);

    // Pairs are visited in creation order; the cost ranking only picks alpha.
    std::vector<std::size_t> order(plants.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return plants[a].id < plants[b].id; });

    for (std::size_t i : order) {
        Plant& mover = plants[i];
        previous = mover.position;
        for (std::size_t j : order) {
            if (j == i) continue;
            const Plant& target = plants[j];
            if (!is_attracted(mover, target)) continue;
            const double step = attraction_step(mover, target, unit(rng), params.attraction_base,
                                                params.expansion_range.hi);
            const std::vector<double>& toward = start_positions[j];
            for (std::size_t d = 0; d < mover.position.size(); ++d) {
                mover.position[d] += step * (toward[d] - mover.position[d]);
            }
        }
        space.clamp(mover.position);
        hybrid_mutation(mover.position, space, rate, params.mutation_sigma_frac, rng);

        if (mover.position == previous) continue;
        const double cost = objective(mover.position);
        ++stats.evaluations;
        if (std::isfinite(cost)) {
            mover.cost = cost;
        } else {
            mover.position.swap(previous);
            ++stats.rejected_moves;
        }
    }

    for (Plant& p : plants) p.intra_competition = sample(params.lambda_range, rng);
    return stats;
}

void sort_by_cost(std::vector<Plant>& plants) {
    std::stable_sort(plants.begin(), plants.end(), [](const Plant& a, const Plant& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.id < b.id;
    });
}

VaoOptimizer::VaoOptimizer(VaoParams params) : params_(std::move(params)) {
    params_.validate();
}

RunResult VaoOptimizer::optimize(const Objective& objective, const SearchSpace& space,
                                 const IterationCallback& on_iteration) const {
    Rng rng(params_.seed);
    return optimize(objective, space, rng, on_iteration);
}

RunResult VaoOptimizer::optimize(const Objective& objective, const SearchSpace& space, Rng& rng,
                                 const IterationCallback& on_iteration) const {
    if (!on_iteration) return optimize_observed(objective, space, rng, {});
    return optimize_observed(objective, space, rng,
                             [&](std::size_t t, const std::vector<Plant>& plants) {
                                 if (t > 0) on_iteration(t - 1, plants.front().cost);
                             });
}

RunResult VaoOptimizer::optimize_observed(
    const Objective& objective, const SearchSpace& space, Rng& rng,
    const std::function<void(std::size_t, const std::vector<Plant>&)>& observer) const {
    const auto started = std::chrono::steady_clock::now();
    RunResult result;
    result.seed = params_.seed;

    std::vector<Plant> plants =
        init_population(objective, space, params_, rng, &result.evaluations);
    update_expansion(plants, params_.expansion_range);
    sort_by_cost(plants);

    auto finish = [&] {
        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return result;
    };

    if (!std::isfinite(plants.front().cost)) {
        result.status = RunStatus::no_finite_value;
        result.alpha_position = plants.front().position;
        result.alpha_cost = kInf;
        result.initial_best_cost = kInf;
        return finish();
    }

    Plant alpha = plants.front();
    result.initial_best_cost = alpha.cost;
    if (observer) observer(0, plants);

    result.best_cost_trace.reserve(params_.iterations);
    for (std::size_t t = 0; t < params_.iterations; ++t) {
        const StepStats stats =
            intra_competition_step(plants, objective, space, params_, t, rng);
        result.evaluations += stats.evaluations;
        result.rejected_moves += stats.rejected_moves;

        // Elitism: if every plant drifted away from alpha, alpha replaces the worst.
        auto best = std::min_element(plants.begin(), plants.end(),
                                     [](const Plant& a, const Plant& b) { return a.cost < b.cost; });
        if (best->cost > alpha.cost) {
            auto worst = std::max_element(
                plants.begin(), plants.end(),
                [](const Plant& a, const Plant& b) { return a.cost < b.cost; });
            worst->position = alpha.position;
            worst->cost = alpha.cost;
        }

        update_expansion(plants, params_.expansion_range);
        sort_by_cost(plants);
        if (plants.front().cost < alpha.cost) alpha = plants.front();

        result.best_cost_trace.push_back(alpha.cost);
        if (observer) observer(t + 1, plants);
    }

    result.alpha_position = alpha.position;
    result.alpha_cost = alpha.cost;
    return finish();
}

RunResult vao_optimize(const Objective& objective, const SearchSpace& space,
                       const VaoParams& params) {
    return VaoOptimizer(params).optimize(objective, space);
}

}  // namespace vao
