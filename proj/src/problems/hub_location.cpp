#include "vao/problems/hub_location.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

namespace vao::problems {

void HlaInstance::validate() const {
    if (facilities == 0) throw ConfigError("facility count p must be at least 1");
    if (clients.empty()) throw ConfigError("location instance has no clients");
    if (facilities > clients.size()) {
        throw ConfigError("facility count p must not exceed the number of clients");
    }
    if (demands.size() != clients.size()) {
        throw ConfigError("location instance needs one demand per client");
    }
    for (double d : demands) {
        if (!(d > 0.0)) throw ConfigError("client demands must be positive");
    }
}

HlaInstance hla_random_instance(std::size_t clients, std::size_t facilities, std::uint64_t seed) {
    HlaInstance inst;
    inst.clients = random_points(clients, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> demand(1.0, 100.0);
    inst.demands.resize(clients);
    for (double& d : inst.demands) d = demand(rng);
    inst.facilities = facilities;
    inst.validate();
    return inst;
}

namespace {

void check_length(const HlaInstance& instance, std::span<const double> x) {
    if (instance.facilities == 0) throw ConfigError("facility count p must be at least 1");
    if (x.size() != 2 * instance.facilities) {
        throw DimensionError("location vector must have 2 * p entries");
    }
}

}  // namespace

std::vector<std::size_t> hla_assignment(const HlaInstance& instance, std::span<const double> x) {
    check_length(instance, x);
    std::vector<std::size_t> nearest(instance.clients.size(), 0);
    for (std::size_t c = 0; c < instance.clients.size(); ++c) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t f = 0; f < instance.facilities; ++f) {
            const double d = distance(instance.clients[c], {x[2 * f], x[2 * f + 1]});
            if (d < best) {
                best = d;
                nearest[c] = f;
            }
        }
    }
    return nearest;
}

double hla_objective(const HlaInstance& instance, std::span<const double> x) {
    check_length(instance, x);
    double cost = 0.0;
    for (std::size_t c = 0; c < instance.clients.size(); ++c) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t f = 0; f < instance.facilities; ++f) {
            best = std::min(best, distance(instance.clients[c], {x[2 * f], x[2 * f + 1]}));
        }
        cost += instance.demands[c] * best;
    }
    return cost;
}

SearchSpace hla_space(const HlaInstance& instance) {
    instance.validate();
    Point lo = instance.clients.front();
    Point hi = lo;
    for (const Point& p : instance.clients) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    // a degenerate axis still needs a nonempty box
    if (hi.x == lo.x) hi.x = lo.x + 1.0;
    if (hi.y == lo.y) hi.y = lo.y + 1.0;
    std::vector<double> lower;
    std::vector<double> upper;
    for (std::size_t f = 0; f < instance.facilities; ++f) {
        lower.insert(lower.end(), {lo.x, lo.y});
        upper.insert(upper.end(), {hi.x, hi.y});
    }
    return SearchSpace(std::move(lower), std::move(upper));
}

Objective hla_as_objective(const HlaInstance& instance) {
    instance.validate();
    return Objective{"hla", [instance](std::span<const double> x) {
                         return hla_objective(instance, x);
                     }};
}

}  // namespace vao::problems
