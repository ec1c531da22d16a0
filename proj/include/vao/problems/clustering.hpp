#pragma once

// Center-based clustering scored by the sum of Euclidean distances from each
// sample to its nearest center (not squared).

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "vao/common.hpp"

namespace vao::problems {

struct ClusterInstance {
    std::vector<std::vector<double>> samples;
    std::size_t k = 1;

    [[nodiscard]] std::size_t features() const {
        return samples.empty() ? 0 : samples.front().size();
    }
    /// 1 <= k <= samples; all samples share one feature count.
    void validate() const;
};

/// x holds k centers back to back, each of features() values.
double clustering_objective(const ClusterInstance& instance, std::span<const double> x);

/// Per-feature data bounding box, repeated for every center.
SearchSpace clustering_space(const ClusterInstance& instance);
Objective clustering_as_objective(const ClusterInstance& instance);

/// CSV of numeric features; non-numeric lines (headers) are skipped.
ClusterInstance parse_cluster_csv(std::istream& in, std::size_t k);
ClusterInstance load_cluster_csv(const std::filesystem::path& path, std::size_t k);

/// Iris measurements shipped with the project (150 x 4).
ClusterInstance iris_instance(std::size_t k = 3);
std::filesystem::path data_directory();

}  // namespace vao::problems
