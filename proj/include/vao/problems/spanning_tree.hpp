#pragma once

// Euclidean minimum spanning tree via perturbed-weight decoding: one key per
// edge scales its weight by (1 + kappa * key), Prim runs on the scaled weights
// and the tree is scored by its true length. Keys of zero give the exact MST.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "vao/common.hpp"
#include "vao/problems/points.hpp"

namespace vao::problems {

struct MstInstance {
    std::vector<Point> points;

    /// At least two points, all distinct.
    void validate() const;
    [[nodiscard]] std::size_t vertices() const { return points.size(); }
    [[nodiscard]] std::size_t edges() const { return points.size() * (points.size() - 1) / 2; }
    /// Key index of edge (i, j), i < j, in row-major upper-triangle order.
    [[nodiscard]] std::size_t edge_index(std::size_t i, std::size_t j) const;
    [[nodiscard]] double weight(std::size_t i, std::size_t j) const;
};

struct SpanningTree {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    double length = 0.0;
};

inline constexpr double kMstPerturbation = 1.0;

SpanningTree mst_decode(const MstInstance& instance, std::span<const double> keys,
                        double kappa = kMstPerturbation);

SearchSpace mst_space(const MstInstance& instance);
Objective mst_as_objective(const MstInstance& instance);

}  // namespace vao::problems
