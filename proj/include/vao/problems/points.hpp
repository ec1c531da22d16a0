#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace vao::problems {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);

/// `count` distinct points uniform in [lo, hi]^2.
std::vector<Point> random_points(std::size_t count, std::uint64_t seed, double lo = 0.0,
                                 double hi = 100.0);

/// "x y" or "x y weight" per line; a missing weight reads as 1.
struct WeightedPoints {
    std::vector<Point> points;
    std::vector<double> weights;
};
WeightedPoints parse_points(std::istream& in);
WeightedPoints load_points(const std::filesystem::path& path);
void write_points(std::ostream& out, const std::vector<Point>& points,
                  const std::vector<double>& weights = {});

}  // namespace vao::problems
