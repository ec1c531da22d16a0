#include "vao/problems/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "text_io.hpp"

namespace vao::problems {

void PmsInstance::validate_shape() const {
    const std::size_t m = machines();
    const std::size_t n = tasks();
    if (m == 0 || n == 0) throw ConfigError("scheduling instance needs machines and tasks");
    if (setup.size() != m) throw ConfigError("setup matrix must have one row per machine");
    for (std::size_t k = 0; k < m; ++k) {
        if (processing[k].size() != n || setup[k].size() != n) {
            throw ConfigError("every machine row must list one value per task");
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (!(processing[k][t] >= 0.0 && std::isfinite(processing[k][t])) ||
                !(setup[k][t] >= 0.0 && std::isfinite(setup[k][t]))) {
                throw ConfigError("times must be finite and non-negative");
            }
        }
    }
}

void PmsInstance::validate() const {
    validate_shape();
    for (std::size_t k = 0; k < machines(); ++k) {
        for (std::size_t t = 0; t < tasks(); ++t) {
            if (!(processing[k][t] >= 10.0 && processing[k][t] <= 50.0)) {
                throw ConfigError("processing times must lie in [10, 50]");
            }
            if (!(setup[k][t] >= 3.0 && setup[k][t] <= 9.0)) {
                throw ConfigError("setup times must lie in [3, 9]");
            }
        }
    }
}

const std::vector<std::vector<double>>& pms_table_processing() {
    static const std::vector<std::vector<double>> table = {
        {23, 49, 22, 11, 41, 28, 47, 37, 50, 11},
        {24, 39, 50, 22, 34, 31, 25, 11, 41, 15},
        {47, 42, 29, 50, 27, 47, 14, 15, 28, 10},
    };
    return table;
}

std::vector<std::vector<double>> draw_setups(std::size_t machines, std::size_t tasks,
                                             std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> draw(3, 9);
    std::vector<std::vector<double>> s(machines, std::vector<double>(tasks));
    for (auto& row : s) {
        for (double& v : row) v = draw(rng);
    }
    return s;
}

PmsInstance pms_paper_instance() {
    PmsInstance inst{pms_table_processing(), draw_setups(3, 10, kPmsSetupSeed)};
    inst.validate();
    return inst;
}

PmsInstance pms_sub_instance(const PmsInstance& instance, std::span<const std::size_t> tasks) {
    PmsInstance sub;
    sub.processing.resize(instance.machines());
    sub.setup.resize(instance.machines());
    for (std::size_t k = 0; k < instance.machines(); ++k) {
        for (std::size_t t : tasks) {
            if (t >= instance.tasks()) throw ConfigError("task index out of range");
            sub.processing[k].push_back(instance.processing[k][t]);
            sub.setup[k].push_back(instance.setup[k][t]);
        }
    }
    sub.validate();
    return sub;
}

Schedule pms_decode(const PmsInstance& instance, std::span<const double> keys) {
    const std::size_t m = instance.machines();
    const std::size_t n = instance.tasks();
    if (keys.size() != 2 * n) {
        throw DimensionError("scheduling key vector must have 2 * tasks entries");
    }
    Schedule s;
    s.machine_of_task.resize(n);
    s.sequence.assign(m, {});
    for (std::size_t t = 0; t < n; ++t) {
        const double scaled = std::floor(std::clamp(keys[t], 0.0, 1.0) * static_cast<double>(m));
        s.machine_of_task[t] = std::min(static_cast<std::size_t>(scaled), m - 1);
    }
    std::vector<std::size_t> by_key(n);
    std::iota(by_key.begin(), by_key.end(), std::size_t{0});
    std::stable_sort(by_key.begin(), by_key.end(),
                     [&](std::size_t a, std::size_t b) { return keys[n + a] < keys[n + b]; });
    for (std::size_t t : by_key) s.sequence[s.machine_of_task[t]].push_back(t);
    return s;
}

std::vector<double> pms_completion_times(const PmsInstance& instance, const Schedule& schedule) {
    std::vector<double> done(instance.machines(), 0.0);
    for (std::size_t k = 0; k < schedule.sequence.size(); ++k) {
        for (std::size_t t : schedule.sequence[k]) {
            // start = previous finish + setup; finish = start + processing
            done[k] += instance.setup[k][t] + instance.processing[k][t];
        }
    }
    return done;
}

double pms_cmax(const PmsInstance& instance, const Schedule& schedule) {
    const auto done = pms_completion_times(instance, schedule);
    return *std::max_element(done.begin(), done.end());
}

SearchSpace pms_space(const PmsInstance& instance) {
    return SearchSpace::uniform(2 * instance.tasks(), 0.0, 1.0);
}

VaoParams pms_vao_params(std::uint64_t seed) {
    VaoParams p;
    p.population_size = 20;
    p.iterations = 500;
    p.mutation_rate = 0.5;
    p.mutation_sigma_frac = 0.5;
    p.mutation_damping = 1.0;
    p.attraction_base = 0.2;
    p.seed = seed;
    return p;
}

Objective pms_as_objective(const PmsInstance& instance) {
    instance.validate();
    return Objective{"pms", [instance](std::span<const double> keys) {
                         return pms_cmax(instance, pms_decode(instance, keys));
                     }};
}

PmsInstance parse_pms_instance(std::istream& in) {
    auto lines = detail::read_lines(in);
    if (lines.empty() || lines.size() % 2 != 0) {
        throw ConfigError("scheduling instance needs m processing rows followed by m setup rows");
    }
    const std::size_t m = lines.size() / 2;
    PmsInstance inst;
    for (std::size_t k = 0; k < m; ++k) inst.processing.push_back(detail::numbers(lines[k]));
    for (std::size_t k = 0; k < m; ++k) inst.setup.push_back(detail::numbers(lines[m + k]));
    inst.validate();
    return inst;
}

PmsInstance load_pms_instance(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return parse_pms_instance(in);
}

void write_pms_instance(std::ostream& out, const PmsInstance& instance) {
    auto row_out = [&out](const std::vector<double>& row) {
        for (std::size_t t = 0; t < row.size(); ++t) out << (t ? " " : "") << format_number(row[t]);
        out << '\n';
    };
    out << "# processing time, one row per machine\n";
    for (const auto& row : instance.processing) row_out(row);
    out << "# setup time, one row per machine\n";
    for (const auto& row : instance.setup) row_out(row);
}

}  // namespace vao::problems
