#pragma once

// Reference computations used to check heuristic results: exact where the
// problem allows it, otherwise strong deterministic restarts.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vao/common.hpp"
#include "vao/problems/clustering.hpp"
#include "vao/problems/hub_location.hpp"
#include "vao/problems/scheduling.hpp"
#include "vao/problems/spanning_tree.hpp"

namespace vao::problems {

/// Exact Euclidean MST length (dense Prim on true weights).
double prim_mst(const MstInstance& instance);

/// Longest-processing-time list scheduling: tasks by decreasing fastest time,
/// each to the machine where it would finish first.
struct LptResult {
    Schedule schedule;
    double cmax = 0.0;
};
LptResult lpt_schedule(const PmsInstance& instance);

/// Largest machines^tasks that brute_force_pms accepts (3^8).
inline constexpr std::size_t kBruteForceLimit = 6561;

/// Exact optimum by enumerating every assignment. Setups are sequence
/// independent, so the order within a machine does not change C-max.
/// Throws ConfigError above kBruteForceLimit combinations.
double brute_force_pms(const PmsInstance& instance);

/// Weighted multi-facility Weber solution by alternating nearest-center
/// assignment and Weiszfeld geometric-median updates, k-means++ seeded.
struct MedianClustering {
    std::vector<std::vector<double>> centers;
    double cost = 0.0;
};
MedianClustering median_clustering_restarts(const std::vector<std::vector<double>>& samples,
                                            const std::vector<double>& weights, std::size_t k,
                                            std::size_t restarts, std::uint64_t seed);

/// Best sum-of-distances over restarts for a clustering instance.
double kmeans_restarts(const ClusterInstance& instance, std::size_t restarts,
                       std::uint64_t seed = 1);

/// Demand-weighted warm start for facility location.
double hla_warm_start(const HlaInstance& instance, std::size_t restarts, std::uint64_t seed = 1);

/// Best of `budget` uniform samples.
double random_search(const Objective& objective, const SearchSpace& space, std::size_t budget,
                     std::uint64_t seed);

}  // namespace vao::problems
