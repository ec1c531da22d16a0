#include "vao/problems/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "text_io.hpp"

#ifndef VAO_DATA_DIR
#define VAO_DATA_DIR "data"
#endif

namespace vao::problems {

void ClusterInstance::validate() const {
    if (samples.empty()) throw ConfigError("clustering instance has no samples");
    if (k < 1) throw ConfigError("cluster count k must be at least 1");
    if (k > samples.size()) throw ConfigError("cluster count k exceeds the sample count");
    const std::size_t d = features();
    if (d == 0) throw ConfigError("samples need at least one feature");
    for (const auto& s : samples) {
        if (s.size() != d) throw ConfigError("samples have differing feature counts");
    }
}

double clustering_objective(const ClusterInstance& instance, std::span<const double> x) {
    const std::size_t d = instance.features();
    if (x.size() != instance.k * d) {
        throw DimensionError("center vector must have k * features entries");
    }
    double total = 0.0;
    for (const auto& s : instance.samples) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < instance.k; ++c) {
            double sq = 0.0;
            for (std::size_t f = 0; f < d; ++f) {
                const double diff = s[f] - x[c * d + f];
                sq += diff * diff;
            }
            best = std::min(best, sq);
        }
        total += std::sqrt(best);
    }
    return total;
}

SearchSpace clustering_space(const ClusterInstance& instance) {
    instance.validate();
    const std::size_t d = instance.features();
    std::vector<double> lo = instance.samples.front();
    std::vector<double> hi = lo;
    for (const auto& s : instance.samples) {
        for (std::size_t f = 0; f < d; ++f) {
            lo[f] = std::min(lo[f], s[f]);
            hi[f] = std::max(hi[f], s[f]);
        }
    }
    for (std::size_t f = 0; f < d; ++f) {
        if (hi[f] == lo[f]) hi[f] = lo[f] + 1.0;
    }
    std::vector<double> lower;
    std::vector<double> upper;
    for (std::size_t c = 0; c < instance.k; ++c) {
        lower.insert(lower.end(), lo.begin(), lo.end());
        upper.insert(upper.end(), hi.begin(), hi.end());
    }
    return SearchSpace(std::move(lower), std::move(upper));
}

Objective clustering_as_objective(const ClusterInstance& instance) {
    instance.validate();
    return Objective{"cluster", [instance](std::span<const double> x) {
                         return clustering_objective(instance, x);
                     }};
}

ClusterInstance parse_cluster_csv(std::istream& in, std::size_t k) {
    ClusterInstance inst;
    inst.k = k;
    for (const auto& line : detail::read_lines(in, /*commas=*/true)) {
        if (!detail::all_numeric(line)) continue;
        inst.samples.push_back(detail::numbers(line));
    }
    inst.validate();
    return inst;
}

ClusterInstance load_cluster_csv(const std::filesystem::path& path, std::size_t k) {
    auto in = detail::open_input(path);
    return parse_cluster_csv(in, k);
}

std::filesystem::path data_directory() {
    if (const char* env = std::getenv("VAO_DATA_DIR"); env && *env) return env;
    return VAO_DATA_DIR;
}

ClusterInstance iris_instance(std::size_t k) {
    return load_cluster_csv(data_directory() / "iris.csv", k);
}

}  // namespace vao::problems
