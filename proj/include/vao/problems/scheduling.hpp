#pragma once

// Unrelated parallel machine scheduling with sequence-independent setups,
// minimizing the makespan (C-max). Encoded as 2n random keys in [0, 1]:
// the first n pick machines, the second n order tasks within a machine.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "vao/common.hpp"
#include "vao/vao.hpp"

namespace vao::problems {

struct PmsInstance {
    /// processing[m][t]: time of task t on machine m.
    std::vector<std::vector<double>> processing;
    /// setup[m][t]: setup paid before task t on machine m, including the first task.
    std::vector<std::vector<double>> setup;

    [[nodiscard]] std::size_t machines() const { return processing.size(); }
    [[nodiscard]] std::size_t tasks() const {
        return processing.empty() ? 0 : processing.front().size();
    }
    /// Consistent sizes, finite non-negative times.
    void validate_shape() const;
    /// validate_shape plus processing in [10, 50] and setups in [3, 9].
    void validate() const;
};

struct Schedule {
    std::vector<std::size_t> machine_of_task;
    /// Per machine, its tasks in execution order.
    std::vector<std::vector<std::size_t>> sequence;
};

/// Processing times published for the 3 x 10 benchmark, in machine-major order.
const std::vector<std::vector<double>>& pms_table_processing();

/// Seed used for the bundled setup draw.
inline constexpr std::uint64_t kPmsSetupSeed = 15;

/// Integer setups drawn uniformly from {3..9} with a fixed seed.
std::vector<std::vector<double>> draw_setups(std::size_t machines, std::size_t tasks,
                                             std::uint64_t seed);

/// The 3 x 10 benchmark with setups from draw_setups(3, 10, kPmsSetupSeed).
PmsInstance pms_paper_instance();

/// Restriction to the given task columns (in the given order).
PmsInstance pms_sub_instance(const PmsInstance& instance, std::span<const std::size_t> tasks);

Schedule pms_decode(const PmsInstance& instance, std::span<const double> keys);

/// Completion time of every machine.
std::vector<double> pms_completion_times(const PmsInstance& instance, const Schedule& schedule);
double pms_cmax(const PmsInstance& instance, const Schedule& schedule);

SearchSpace pms_space(const PmsInstance& instance);

/// VAO settings for the random-key encoding. The default mutation decays
/// before the population leaves its first assignment plateau.
VaoParams pms_vao_params(std::uint64_t seed = 0);
Objective pms_as_objective(const PmsInstance& instance);

/// Line format: m rows of processing times, then m rows of setups (n values each).
PmsInstance parse_pms_instance(std::istream& in);
PmsInstance load_pms_instance(const std::filesystem::path& path);
void write_pms_instance(std::ostream& out, const PmsInstance& instance);

}  // namespace vao::problems
