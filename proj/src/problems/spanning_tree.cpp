#include "vao/problems/spanning_tree.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace vao::problems {

void MstInstance::validate() const {
    if (points.size() < 2) throw ConfigError("spanning tree instance needs at least 2 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw ConfigError("duplicate point at indices " + std::to_string(i) + " and " +
                                  std::to_string(j));
            }
        }
    }
}

std::size_t MstInstance::edge_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const std::size_t n = points.size();
    // edges before row i: sum_{r<i} (n - 1 - r)
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

double MstInstance::weight(std::size_t i, std::size_t j) const {
    return distance(points[i], points[j]);
}

SpanningTree mst_decode(const MstInstance& instance, std::span<const double> keys, double kappa) {
    const std::size_t n = instance.vertices();
    if (n < 2) throw ConfigError("spanning tree instance needs at least 2 points");
    if (keys.size() != instance.edges()) {
        throw DimensionError("spanning tree key vector must have one entry per edge");
    }
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<bool> in_tree(n, false);
    std::vector<double> best(n, kInf);
    std::vector<std::size_t> parent(n, 0);
    auto scaled = [&](std::size_t i, std::size_t j) {
        return instance.weight(i, j) * (1.0 + kappa * keys[instance.edge_index(i, j)]);
    };

    SpanningTree tree;
    tree.edges.reserve(n - 1);
    in_tree[0] = true;
    for (std::size_t v = 1; v < n; ++v) {
        best[v] = scaled(0, v);
        parent[v] = 0;
    }
    for (std::size_t added = 1; added < n; ++added) {
        std::size_t next = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!in_tree[v] && (next == n || best[v] < best[next])) next = v;
        }
        in_tree[next] = true;
        tree.edges.emplace_back(std::min(parent[next], next), std::max(parent[next], next));
        tree.length += instance.weight(parent[next], next);
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double w = scaled(next, v);
            if (w < best[v]) {
                best[v] = w;
                parent[v] = next;
            }
        }
    }
    return tree;
}

SearchSpace mst_space(const MstInstance& instance) {
    return SearchSpace::uniform(instance.edges(), 0.0, 1.0);
}

Objective mst_as_objective(const MstInstance& instance) {
    instance.validate();
    return Objective{"mst", [instance](std::span<const double> keys) {
                         return mst_decode(instance, keys).length;
                     }};
}

}  // namespace vao::problems
