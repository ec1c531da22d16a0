#pragma once

// Line-oriented helpers shared by the instance readers.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vao/common.hpp"

namespace vao::problems::detail {

struct Line {
    std::size_t number = 0;  // 1-based
    std::vector<std::string> tokens;
};

inline std::vector<std::string> split(std::string_view text, bool commas) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        const bool sep = ch == ' ' || ch == '\t' || ch == '\r' || (commas && ch == ',');
        if (sep) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

/// Non-empty lines with '#' comments removed.
inline std::vector<Line> read_lines(std::istream& in, bool commas = false) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto tokens = split(raw, commas);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

inline std::optional<double> to_double(const std::string& token) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return v;
}

inline std::vector<double> numbers(const Line& line) {
    std::vector<double> out;
    out.reserve(line.tokens.size());
    for (const auto& t : line.tokens) {
        auto v = to_double(t);
        if (!v) {
            throw ConfigError("line " + std::to_string(line.number) + ": '" + t +
                              "' is not a number");
        }
        out.push_back(*v);
    }
    return out;
}

inline bool all_numeric(const Line& line) {
    for (const auto& t : line.tokens) {
        if (!to_double(t)) return false;
    }
    return true;
}

inline std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read instance file " + path.string());
    return in;
}

}  // namespace vao::problems::detail
