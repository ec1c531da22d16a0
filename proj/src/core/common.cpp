#include "vao/common.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>

namespace vao {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) {
        throw ConfigError("search space must have at least one dimension");
    }
    if (lower_.size() != upper_.size()) {
        throw ConfigError("lower and upper bound vectors differ in length");
    }
    for (std::size_t d = 0; d < lower_.size(); ++d) {
        if (!std::isfinite(lower_[d]) || !std::isfinite(upper_[d]) || !(lower_[d] < upper_[d])) {
            throw ConfigError("invalid bounds in dimension " + std::to_string(d) +
                              ": lower must be finite and strictly below upper");
        }
    }
}

SearchSpace SearchSpace::uniform(std::size_t dimension, double lower, double upper) {
    return SearchSpace(std::vector<double>(dimension, lower), std::vector<double>(dimension, upper));
}

void SearchSpace::clamp(std::span<double> x) const {
    if (x.size() != dimension()) {
        throw DimensionError("position length does not match search space dimension");
    }
    for (std::size_t d = 0; d < x.size(); ++d) {
        x[d] = std::clamp(x[d], lower_[d], upper_[d]);
    }
}

bool SearchSpace::contains(std::span<const double> x) const {
    if (x.size() != dimension()) return false;
    for (std::size_t d = 0; d < x.size(); ++d) {
        if (!(x[d] >= lower_[d] && x[d] <= upper_[d])) return false;
    }
    return true;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

}  // namespace vao
