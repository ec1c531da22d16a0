#pragma once

// Seeded repeated experiments, summaries, comparisons and landscape grids.
//
// Output layout of run_experiment with a non-empty `out`:
//   out/summary.csv                 header + one row, columns as kSummaryHeader
//   out/traces/run_<seed>.jsonl     {"iteration":t,"best_cost":v} per line, t = 0..iterations
// Line 0 is the best cost of the initial population.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vao/common.hpp"
#include "vao/vao.hpp"

namespace vao::harness {

enum class Algorithm { vao, pso, de, random };

/// Throws ConfigError naming the valid options.
Algorithm parse_algorithm(std::string_view name);
std::string to_string(Algorithm algorithm);

/// Seeds of the built-in point instances used when no --instance is given.
inline constexpr std::uint64_t kDefaultMstSeed = 7;
inline constexpr std::size_t kDefaultMstPoints = 22;
inline constexpr std::uint64_t kDefaultHlaSeed = 40;
inline constexpr std::size_t kDefaultHlaClients = 40;

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::vao;
    /// Exactly one of `function` and `problem` is set.
    std::string function;
    std::string problem;  // ed | pms | mst | hla | cluster
    /// Instance file for `problem`; empty selects the bundled instance.
    std::filesystem::path instance;
    std::size_t dimensions = 0;  // 0: the function's natural dimension
    std::optional<double> lower;
    std::optional<double> upper;
    std::size_t population = 20;
    std::size_t iterations = 500;
    std::size_t repeats = 10;
    std::uint64_t base_seed = 1;
    std::size_t clusters = 3;
    std::size_t facilities = 4;
    std::optional<double> mutation_rate;
    std::optional<double> mutation_damping;
    std::optional<double> mutation_sigma_frac;
    std::optional<double> attraction_base;
    std::filesystem::path out;
    bool timing = false;
    std::size_t threads = 1;
    std::string label;

    /// Function name, or the problem name with the instance file when given.
    [[nodiscard]] std::string target() const;
    /// Nominal objective evaluations per run: population * (iterations + 1).
    [[nodiscard]] std::size_t budget() const;
    void validate() const;
};

/// Applies one `key = value` setting; keys mirror the CLI flags
/// (algo, function, problem, instance, dims, lower, upper, pop, iters, repeats,
/// seed, clusters, facilities, mutation_rate, mutation_damping,
/// mutation_sigma_frac, attraction_base, out, timing, threads, label).
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// `key = value` lines; '#' starts a comment.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Objective and box for a config's target.
struct Target {
    Objective objective;
    SearchSpace space;
};
Target resolve_target(const ExperimentConfig& config);

/// VAO parameters for one repeat (problem presets plus explicit overrides).
VaoParams vao_params_for(const ExperimentConfig& config, std::uint64_t seed);

struct SummaryRow {
    std::string label;
    std::string target;
    std::string algorithm;
    std::size_t dimensions = 0;
    std::size_t population = 0;
    std::size_t iterations = 0;
    std::size_t budget = 0;
    std::size_t repeats = 0;
    std::vector<std::uint64_t> seeds;
    double avg_best_cost = 0.0;
    /// Sample standard deviation; 0 when repeats == 1.
    double std_best_cost = 0.0;
    std::optional<double> avg_runtime_s;  // only with timing
};

inline constexpr std::string_view kSummaryHeader =
    "label,target,algorithm,dims,population,iterations,budget,repeats,seeds,"
    "avg_best_cost,std_best_cost,avg_runtime_s";

/// One CSV line without newline; seeds are ';'-separated.
std::string summary_csv_line(const SummaryRow& row);

/// Mean and sample standard deviation, accumulated in the given order.
std::pair<double, double> mean_and_std(const std::vector<double>& values);

struct ExperimentResult {
    SummaryRow summary;
    std::vector<RunResult> runs;  // in seed order
};

/// Runs `repeats` seeded runs (seed = base_seed + r), possibly on several threads,
/// and writes the trace and summary files when config.out is set.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Trace file body for one run.
std::string trace_jsonl(const RunResult& run);

struct CompareRow {
    SummaryRow summary;
    bool winner = false;
};

inline constexpr std::string_view kCompareHeader =
    "label,target,algorithm,dims,population,iterations,budget,repeats,seeds,"
    "avg_best_cost,std_best_cost,avg_runtime_s,winner";

/// Shared `key = value` lines, then one `[label]` section per config whose
/// keys override the shared ones. Sections without a label key use the header.
std::vector<ExperimentConfig> parse_compare_spec(std::istream& in);
std::vector<ExperimentConfig> load_compare_spec(const std::filesystem::path& path);

/// Throws ConfigError "unequal evaluation budgets" unless every config has the
/// same budget, and requires at least two configs. The lowest average per
/// target wins; ties go to the earlier config. With `out` set, each config
/// writes into out/<label> and the table goes to out/compare.csv.
std::vector<CompareRow> compare(const std::vector<ExperimentConfig>& configs,
                                const std::filesystem::path& out = {});

std::string compare_csv_line(const CompareRow& row);

/// x,y,f rows over the function's default 2-D box; resolution 1 samples the
/// center. Throws DimensionError for functions that cannot be evaluated in 2-D.
void emit_landscape_grid(std::string_view function, std::size_t resolution, std::ostream& out);

}  // namespace vao::harness
