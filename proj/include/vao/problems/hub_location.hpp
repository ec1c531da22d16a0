#pragma once

// Continuous single-allocation facility location: place p facilities in the
// plane, every client uses its nearest one, minimize demand-weighted distance.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vao/common.hpp"
#include "vao/problems/points.hpp"

namespace vao::problems {

struct HlaInstance {
    std::vector<Point> clients;
    std::vector<double> demands;
    std::size_t facilities = 1;

    /// p >= 1, p < clients (or == for the degenerate all-clients case), demands > 0.
    void validate() const;
};

/// `clients` points in [0, 100]^2 with demands uniform in [1, 100].
HlaInstance hla_random_instance(std::size_t clients, std::size_t facilities, std::uint64_t seed);

/// x = (fx_1, fy_1, ..., fx_p, fy_p).
double hla_objective(const HlaInstance& instance, std::span<const double> x);

/// Index of the nearest facility for each client.
std::vector<std::size_t> hla_assignment(const HlaInstance& instance, std::span<const double> x);

/// Client bounding box, repeated for every facility.
SearchSpace hla_space(const HlaInstance& instance);
Objective hla_as_objective(const HlaInstance& instance);

}  // namespace vao::problems
