#include "vao/problems/economic_dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "text_io.hpp"

namespace vao::problems {

namespace {

// Cholesky on B + eps*I; failure means B has a clearly negative eigenvalue.
bool positive_semidefinite(const std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(m[i][i]));
    const double eps = 1e-12 * std::max(scale, 1.0);
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = m[i][j] + (i == j ? eps : 0.0);
            for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            if (i == j) {
                if (s <= 0.0) return false;
                l[i][i] = std::sqrt(s);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    return true;
}

}  // namespace

void EdInstance::validate() const {
    const std::size_t n = a.size();
    if (n == 0) throw ConfigError("economic dispatch instance has no units");
    if (b.size() != n || c.size() != n || p_min.size() != n || p_max.size() != n) {
        throw ConfigError("economic dispatch coefficient vectors differ in length");
    }
    if (loss.size() != n) throw ConfigError("loss matrix must be n x n");
    double capacity = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (loss[i].size() != n) throw ConfigError("loss matrix must be n x n");
        if (!(p_min[i] < p_max[i])) {
            throw ConfigError("unit " + std::to_string(i + 1) + ": pmin must be below pmax");
        }
        capacity += p_max[i];
    }
    if (!(demand > 0.0)) throw ConfigError("power demand must be positive");
    if (capacity < demand) throw ConfigError("total capacity is below the power demand");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (loss[i][j] != loss[j][i]) throw ConfigError("loss matrix must be symmetric");
        }
    }
    if (!positive_semidefinite(loss)) {
        throw ConfigError("loss matrix must be positive semidefinite");
    }
    if (!(penalty_weight > 0.0)) throw ConfigError("penalty weight must be positive");
}

EdInstance ed_paper_instance() {
    EdInstance inst;
    inst.a = {0.0070, 0.0095, 0.0090, 0.0090, 0.0080, 0.0075};
    inst.b = {7.0, 10.0, 8.5, 11.0, 10.5, 12.0};
    inst.c = {240.0, 200.0, 220.0, 200.0, 220.0, 190.0};
    inst.p_min = {100.0, 50.0, 80.0, 50.0, 50.0, 50.0};
    inst.p_max = {500.0, 200.0, 300.0, 150.0, 200.0, 120.0};
    inst.loss = {
        {1.7e-5, 1.2e-5, 0.7e-5, -0.1e-5, -0.5e-5, -0.2e-5},
        {1.2e-5, 1.4e-5, 0.9e-5, 0.1e-5, -0.6e-5, -0.1e-5},
        {0.7e-5, 0.9e-5, 3.1e-5, 0.0, -1.0e-5, -0.6e-5},
        {-0.1e-5, 0.1e-5, 0.0, 2.4e-5, -0.6e-5, -0.8e-5},
        {-0.5e-5, -0.6e-5, -1.0e-5, -0.6e-5, 12.9e-5, -0.2e-5},
        {-0.2e-5, -0.1e-5, -0.6e-5, -0.8e-5, -0.2e-5, 15.0e-5},
    };
    inst.demand = 1100.0;
    return inst;
}

EdEvaluation ed_objective(const EdInstance& inst, std::span<const double> p) {
    const std::size_t n = inst.units();
    if (p.size() != n) {
        throw DimensionError("dispatch vector has " + std::to_string(p.size()) +
                             " entries, instance has " + std::to_string(n) + " units");
    }
    EdEvaluation r;
    for (std::size_t i = 0; i < n; ++i) {
        r.total_power += p[i];
        r.fuel_cost += inst.a[i] * p[i] * p[i] + inst.b[i] * p[i] + inst.c[i];
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += inst.loss[i][j] * p[j];
        r.loss += p[i] * row;
    }
    r.error = r.total_power - r.loss - inst.demand;
    r.cost = r.fuel_cost + inst.penalty_weight * r.error * r.error;
    return r;
}

SearchSpace ed_space(const EdInstance& inst) { return SearchSpace(inst.p_min, inst.p_max); }

Objective ed_as_objective(const EdInstance& inst) {
    inst.validate();
    return Objective{"ed", [inst](std::span<const double> p) { return ed_objective(inst, p).cost; }};
}

EdInstance parse_ed_instance(std::istream& in) {
    auto lines = detail::read_lines(in);
    EdInstance inst;
    std::vector<std::vector<double>> rows;
    bool have_demand = false;
    for (const auto& line : lines) {
        const std::string& key = line.tokens.front();
        if (key == "PD" || key == "penalty") {
            if (line.tokens.size() != 2) {
                throw ConfigError("line " + std::to_string(line.number) + ": expected '" + key +
                                  " <value>'");
            }
            auto v = detail::to_double(line.tokens[1]);
            if (!v) throw ConfigError("line " + std::to_string(line.number) + ": bad number");
            if (key == "PD") {
                inst.demand = *v;
                have_demand = true;
            } else {
                inst.penalty_weight = *v;
            }
            continue;
        }
        rows.push_back(detail::numbers(line));
    }
    if (!have_demand) throw ConfigError("economic dispatch instance lacks a 'PD' line");
    if (rows.empty() || rows.size() % 2 != 0) {
        throw ConfigError("economic dispatch instance needs n unit lines followed by n B rows");
    }
    const std::size_t n = rows.size() / 2;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != 5) {
            throw ConfigError("unit line " + std::to_string(i + 1) + " must hold 'a b c pmin pmax'");
        }
        inst.a.push_back(rows[i][0]);
        inst.b.push_back(rows[i][1]);
        inst.c.push_back(rows[i][2]);
        inst.p_min.push_back(rows[i][3]);
        inst.p_max.push_back(rows[i][4]);
    }
    inst.loss.assign(rows.begin() + static_cast<std::ptrdiff_t>(n), rows.end());
    inst.validate();
    return inst;
}

EdInstance load_ed_instance(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return parse_ed_instance(in);
}

void write_ed_instance(std::ostream& out, const EdInstance& inst) {
    out << "# a b c pmin pmax\n";
    for (std::size_t i = 0; i < inst.units(); ++i) {
        out << format_number(inst.a[i]) << ' ' << format_number(inst.b[i]) << ' '
            << format_number(inst.c[i]) << ' ' << format_number(inst.p_min[i]) << ' '
            << format_number(inst.p_max[i]) << '\n';
    }
    out << "# loss coefficients B (1/MW)\n";
    for (const auto& row : inst.loss) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << (j ? " " : "") << format_number(row[j]);
        }
        out << '\n';
    }
    out << "PD " << format_number(inst.demand) << '\n';
    out << "penalty " << format_number(inst.penalty_weight) << '\n';
}

}  // namespace vao::problems
