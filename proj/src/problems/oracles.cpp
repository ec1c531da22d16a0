#include "vao/problems/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "vao/baselines.hpp"

namespace vao::problems {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// Weighted geometric median of the members, starting from `center`.
void weiszfeld(std::vector<double>& center, const std::vector<std::vector<double>>& samples,
               const std::vector<double>& weights, const std::vector<std::size_t>& members) {
    const std::size_t d = center.size();
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<double> num(d, 0.0);
        double den = 0.0;
        for (std::size_t i : members) {
            const double dist = euclid(samples[i], center);
            if (dist < 1e-12) continue;
            const double w = weights[i] / dist;
            for (std::size_t f = 0; f < d; ++f) num[f] += w * samples[i][f];
            den += w;
        }
        if (den == 0.0) return;
        double moved = 0.0;
        for (std::size_t f = 0; f < d; ++f) {
            const double next = num[f] / den;
            moved = std::max(moved, std::abs(next - center[f]));
            center[f] = next;
        }
        if (moved < 1e-10) return;
    }
}

double assign(const std::vector<std::vector<double>>& samples, const std::vector<double>& weights,
              const std::vector<std::vector<double>>& centers, std::vector<std::size_t>& label) {
    double cost = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double best = kInf;
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const double dist = euclid(samples[i], centers[c]);
            if (dist < best) {
                best = dist;
                label[i] = c;
            }
        }
        cost += weights[i] * best;
    }
    return cost;
}

std::vector<std::vector<double>> plus_plus_seed(const std::vector<std::vector<double>>& samples,
                                                const std::vector<double>& weights, std::size_t k,
                                                Rng& rng) {
    std::vector<std::vector<double>> centers;
    std::discrete_distribution<std::size_t> first(weights.begin(), weights.end());
    centers.push_back(samples[first(rng)]);
    std::vector<double> score(samples.size());
    while (centers.size() < k) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            double best = kInf;
            for (const auto& c : centers) best = std::min(best, euclid(samples[i], c));
            score[i] = weights[i] * best * best;
        }
        if (std::accumulate(score.begin(), score.end(), 0.0) <= 0.0) {
            centers.push_back(samples[centers.size() % samples.size()]);
            continue;
        }
        std::discrete_distribution<std::size_t> next(score.begin(), score.end());
        centers.push_back(samples[next(rng)]);
    }
    return centers;
}

}  // namespace

double prim_mst(const MstInstance& instance) {
    instance.validate();
    const std::size_t n = instance.vertices();
    std::vector<double> key(n, kInf);
    std::vector<bool> done(n, false);
    key[0] = 0.0;
    double total = 0.0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t u = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!done[v] && (u == n || key[v] < key[u])) u = v;
        }
        done[u] = true;
        total += key[u];
        for (std::size_t v = 0; v < n; ++v) {
            if (!done[v]) key[v] = std::min(key[v], distance(instance.points[u], instance.points[v]));
        }
    }
    return total;
}

LptResult lpt_schedule(const PmsInstance& instance) {
    instance.validate_shape();
    const std::size_t m = instance.machines();
    const std::size_t n = instance.tasks();
    std::vector<double> fastest(n, kInf);
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t k = 0; k < m; ++k) fastest[t] = std::min(fastest[t], instance.processing[k][t]);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fastest[a] > fastest[b]; });

    LptResult r;
    r.schedule.machine_of_task.assign(n, 0);
    r.schedule.sequence.assign(m, {});
    std::vector<double> load(m, 0.0);
    for (std::size_t t : order) {
        std::size_t pick = 0;
        double finish = kInf;
        for (std::size_t k = 0; k < m; ++k) {
            const double f = load[k] + instance.setup[k][t] + instance.processing[k][t];
            if (f < finish) {
                finish = f;
                pick = k;
            }
        }
        load[pick] = finish;
        r.schedule.machine_of_task[t] = pick;
        r.schedule.sequence[pick].push_back(t);
    }
    r.cmax = *std::max_element(load.begin(), load.end());
    return r;
}

double brute_force_pms(const PmsInstance& instance) {
    instance.validate_shape();
    const std::size_t m = instance.machines();
    const std::size_t n = instance.tasks();
    std::size_t combos = 1;
    for (std::size_t t = 0; t < n; ++t) {
        combos *= m;
        if (combos > kBruteForceLimit) {
            throw ConfigError("brute force limited to 3^8 machine assignments");
        }
    }
    double best = kInf;
    std::vector<double> load(m);
    for (std::size_t code = 0; code < combos; ++code) {
        std::fill(load.begin(), load.end(), 0.0);
        std::size_t rest = code;
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t k = rest % m;
            rest /= m;
            load[k] += instance.setup[k][t] + instance.processing[k][t];
        }
        best = std::min(best, *std::max_element(load.begin(), load.end()));
    }
    return best;
}

MedianClustering median_clustering_restarts(const std::vector<std::vector<double>>& samples,
                                            const std::vector<double>& weights, std::size_t k,
                                            std::size_t restarts, std::uint64_t seed) {
    if (samples.empty() || k < 1 || k > samples.size()) {
        throw ConfigError("median clustering needs 1 <= k <= samples");
    }
    if (weights.size() != samples.size()) throw ConfigError("one weight per sample required");
    Rng rng(seed);
    MedianClustering best{{}, kInf};
    std::vector<std::size_t> label(samples.size());
    for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
        auto centers = plus_plus_seed(samples, weights, k, rng);
        double cost = assign(samples, weights, centers, label);
        for (int round = 0; round < 200; ++round) {
            std::vector<std::vector<std::size_t>> members(k);
            for (std::size_t i = 0; i < samples.size(); ++i) members[label[i]].push_back(i);
            for (std::size_t c = 0; c < k; ++c) {
                if (!members[c].empty()) weiszfeld(centers[c], samples, weights, members[c]);
            }
            const double next = assign(samples, weights, centers, label);
            const bool converged = next >= cost - 1e-12 * std::max(1.0, cost);
            cost = next;
            if (converged) break;
        }
        if (cost < best.cost) best = {centers, cost};
    }
    return best;
}

double kmeans_restarts(const ClusterInstance& instance, std::size_t restarts, std::uint64_t seed) {
    instance.validate();
    const std::vector<double> ones(instance.samples.size(), 1.0);
    return median_clustering_restarts(instance.samples, ones, instance.k, restarts, seed).cost;
}

double hla_warm_start(const HlaInstance& instance, std::size_t restarts, std::uint64_t seed) {
    instance.validate();
    std::vector<std::vector<double>> pts;
    pts.reserve(instance.clients.size());
    for (const Point& p : instance.clients) pts.push_back({p.x, p.y});
    return median_clustering_restarts(pts, instance.demands, instance.facilities, restarts, seed)
        .cost;
}

double random_search(const Objective& objective, const SearchSpace& space, std::size_t budget,
                     std::uint64_t seed) {
    if (budget < 1) throw ConfigError("random search budget must be at least 1");
    return baselines::random_search(objective, space, 1, budget - 1, seed).alpha_cost;
}

}  // namespace vao::problems
