#include "vao/problems/points.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "text_io.hpp"

namespace vao::problems {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<Point> random_points(std::size_t count, std::uint64_t seed, double lo, double hi) {
    if (!(lo < hi)) throw ConfigError("point range must satisfy lo < hi");
    Rng rng(seed);
    std::uniform_real_distribution<double> coord(lo, hi);
    std::vector<Point> pts;
    pts.reserve(count);
    while (pts.size() < count) {
        Point p{coord(rng), coord(rng)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return pts;
}

WeightedPoints parse_points(std::istream& in) {
    WeightedPoints out;
    for (const auto& line : detail::read_lines(in)) {
        const auto v = detail::numbers(line);
        if (v.size() != 2 && v.size() != 3) {
            throw ConfigError("line " + std::to_string(line.number) + ": expected 'x y [weight]'");
        }
        out.points.push_back({v[0], v[1]});
        out.weights.push_back(v.size() == 3 ? v[2] : 1.0);
    }
    return out;
}

WeightedPoints load_points(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return parse_points(in);
}

void write_points(std::ostream& out, const std::vector<Point>& points,
                  const std::vector<double>& weights) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << format_number(points[i].x) << ' ' << format_number(points[i].y);
        if (!weights.empty()) out << ' ' << format_number(weights[i]);
        out << '\n';
    }
}

}  // namespace vao::problems
