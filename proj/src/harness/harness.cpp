#include "vao/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vao/baselines.hpp"
#include "vao/problems/clustering.hpp"
#include "vao/problems/economic_dispatch.hpp"
#include "vao/problems/hub_location.hpp"
#include "vao/problems/points.hpp"
#include "vao/problems/scheduling.hpp"
#include "vao/problems/spanning_tree.hpp"
#include "vao/test_functions.hpp"

namespace vao::harness {

namespace fs = std::filesystem;

namespace {

const char* const kProblems = "ed, pms, mst, hla, cluster";

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" + std::string(value) + "'");
}

template <typename T>
T parse_integer(std::string_view key, std::string_view value) {
    T v{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
        bad_value(key, value);
    }
    return v;
}

double parse_real(std::string_view key, std::string_view value) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size() || value.empty() ||
        !std::isfinite(v)) {
        bad_value(key, value);
    }
    return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    bad_value(key, value);
}

bool is_problem(std::string_view name) {
    return name == "ed" || name == "pms" || name == "mst" || name == "hla" || name == "cluster";
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

RunResult run_once(const ExperimentConfig& config, const Target& target, std::uint64_t seed) {
    switch (config.algorithm) {
        case Algorithm::vao:
            return VaoOptimizer(vao_params_for(config, seed)).optimize(target.objective,
                                                                      target.space);
        case Algorithm::pso: {
            baselines::PsoParams p;
            p.population_size = config.population;
            p.iterations = config.iterations;
            p.seed = seed;
            return baselines::pso_optimize(target.objective, target.space, p);
        }
        case Algorithm::de: {
            baselines::DeParams p;
            p.population_size = config.population;
            p.iterations = config.iterations;
            p.seed = seed;
            return baselines::de_optimize(target.objective, target.space, p);
        }
        case Algorithm::random:
            return baselines::random_search(target.objective, target.space, config.population,
                                            config.iterations, seed);
    }
    throw ConfigError("unknown algorithm");
}

std::string join_seeds(const std::vector<std::uint64_t>& seeds) {
    std::string s;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(seeds[i]);
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
    if (name == "vao") return Algorithm::vao;
    if (name == "pso") return Algorithm::pso;
    if (name == "de") return Algorithm::de;
    if (name == "random") return Algorithm::random;
    throw ConfigError("unknown algorithm '" + std::string(name) +
                      "' (valid: vao, pso, de, random)");
}

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::vao: return "vao";
        case Algorithm::pso: return "pso";
        case Algorithm::de: return "de";
        case Algorithm::random: return "random";
    }
    return "?";
}

std::string ExperimentConfig::target() const {
    if (!function.empty()) return function;
    if (instance.empty()) return problem;
    return problem + ":" + instance.filename().string();
}

std::size_t ExperimentConfig::budget() const { return population * (iterations + 1); }

void ExperimentConfig::validate() const {
    if (function.empty() == problem.empty()) {
        throw ConfigError("exactly one of function or problem must be given");
    }
    if (!function.empty()) {
        const auto& f = functions::lookup(function);
        const std::size_t dim = dimensions ? dimensions : f.natural_dimension();
        if (!f.accepts_dimension(dim)) {
            throw DimensionError("function " + f.name + " does not accept dimension " +
                                 std::to_string(dim));
        }
        if (!instance.empty()) throw ConfigError("instance applies to problems only");
    } else {
        if (!is_problem(problem)) {
            throw ConfigError("unknown problem '" + problem + "' (valid: " + kProblems + ")");
        }
        if (lower || upper) throw ConfigError("bounds override applies to test functions only");
        if (dimensions) throw ConfigError("dims applies to test functions only");
    }
    if (lower.has_value() != upper.has_value()) {
        throw ConfigError("lower and upper bounds must be given together");
    }
    if (lower && !(*lower < *upper)) throw ConfigError("lower bound must be below upper bound");
    if (population < 1) throw ConfigError("pop must be at least 1");
    if (repeats < 1) throw ConfigError("repeats must be at least 1");
    if (threads < 1) throw ConfigError("threads must be at least 1");
    if (algorithm == Algorithm::de && population < 4) {
        throw ConfigError("de needs pop of at least 4");
    }
    if (algorithm == Algorithm::vao) vao_params_for(*this, base_seed).validate();
}

void apply_setting(ExperimentConfig& c, std::string_view key, std::string_view raw) {
    const std::string value = trim(raw);
    if (key == "algo") {
        c.algorithm = parse_algorithm(value);
    } else if (key == "function") {
        c.function = value;
    } else if (key == "problem") {
        c.problem = value;
    } else if (key == "instance") {
        c.instance = value;
    } else if (key == "dims") {
        c.dimensions = parse_integer<std::size_t>(key, value);
    } else if (key == "lower") {
        c.lower = parse_real(key, value);
    } else if (key == "upper") {
        c.upper = parse_real(key, value);
    } else if (key == "pop") {
        c.population = parse_integer<std::size_t>(key, value);
    } else if (key == "iters") {
        c.iterations = parse_integer<std::size_t>(key, value);
    } else if (key == "repeats") {
        c.repeats = parse_integer<std::size_t>(key, value);
    } else if (key == "seed") {
        c.base_seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "clusters") {
        c.clusters = parse_integer<std::size_t>(key, value);
    } else if (key == "facilities") {
        c.facilities = parse_integer<std::size_t>(key, value);
    } else if (key == "mutation_rate") {
        c.mutation_rate = parse_real(key, value);
    } else if (key == "mutation_damping") {
        c.mutation_damping = parse_real(key, value);
    } else if (key == "mutation_sigma_frac") {
        c.mutation_sigma_frac = parse_real(key, value);
    } else if (key == "attraction_base") {
        c.attraction_base = parse_real(key, value);
    } else if (key == "out") {
        c.out = value;
    } else if (key == "timing") {
        c.timing = parse_bool(key, value);
    } else if (key == "threads") {
        c.threads = parse_integer<std::size_t>(key, value);
    } else if (key == "label") {
        c.label = value;
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

namespace {

struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> settings;
};

std::vector<Section> read_sections(std::istream& in) {
    std::vector<Section> sections(1);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ConfigError("line " + std::to_string(number) + ": malformed section header");
            }
            sections.push_back({trim(std::string_view(line).substr(1, line.size() - 2)), {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(number) + ": expected key = value");
        }
        std::string key = trim(std::string_view(line).substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(number) + ": empty key");
        sections.back().settings.emplace_back(std::move(key), line.substr(eq + 1));
    }
    return sections;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
    const auto sections = read_sections(in);
    if (sections.size() > 1) throw ConfigError("run config files take no [sections]");
    ExperimentConfig c;
    for (const auto& [k, v] : sections.front().settings) apply_setting(c, k, v);
    return c;
}

ExperimentConfig load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    return parse_config(in);
}

Target resolve_target(const ExperimentConfig& config) {
    if (!config.function.empty()) {
        const auto& f = functions::lookup(config.function);
        const std::size_t dim = config.dimensions ? config.dimensions : f.natural_dimension();
        Objective obj = functions::make_objective(f.name, dim);
        if (config.lower) {
            return {std::move(obj), SearchSpace::uniform(dim, *config.lower, *config.upper)};
        }
        return {std::move(obj), f.default_space(dim)};
    }
    using namespace problems;
    const std::string& p = config.problem;
    const bool file = !config.instance.empty();
    if (p == "ed") {
        const EdInstance inst = file ? load_ed_instance(config.instance) : ed_paper_instance();
        return {ed_as_objective(inst), ed_space(inst)};
    }
    if (p == "pms") {
        const PmsInstance inst = file ? load_pms_instance(config.instance) : pms_paper_instance();
        return {pms_as_objective(inst), pms_space(inst)};
    }
    if (p == "mst") {
        MstInstance inst;
        inst.points = file ? load_points(config.instance).points
                           : random_points(kDefaultMstPoints, kDefaultMstSeed);
        return {mst_as_objective(inst), mst_space(inst)};
    }
    if (p == "hla") {
        HlaInstance inst;
        if (file) {
            auto wp = load_points(config.instance);
            inst.clients = std::move(wp.points);
            inst.demands = std::move(wp.weights);
            inst.facilities = config.facilities;
        } else {
            inst = hla_random_instance(kDefaultHlaClients, config.facilities, kDefaultHlaSeed);
        }
        return {hla_as_objective(inst), hla_space(inst)};
    }
    if (p == "cluster") {
        const ClusterInstance inst = file ? load_cluster_csv(config.instance, config.clusters)
                                          : iris_instance(config.clusters);
        return {clustering_as_objective(inst), clustering_space(inst)};
    }
    throw ConfigError("unknown problem '" + p + "' (valid: " + kProblems + ")");
}

VaoParams vao_params_for(const ExperimentConfig& config, std::uint64_t seed) {
    VaoParams p = config.problem == "pms" ? problems::pms_vao_params(seed) : VaoParams{};
    p.population_size = config.population;
    p.iterations = config.iterations;
    p.seed = seed;
    if (config.mutation_rate) p.mutation_rate = *config.mutation_rate;
    if (config.mutation_damping) p.mutation_damping = *config.mutation_damping;
    if (config.mutation_sigma_frac) p.mutation_sigma_frac = *config.mutation_sigma_frac;
    if (config.attraction_base) p.attraction_base = *config.attraction_base;
    return p;
}

std::pair<double, double> mean_and_std(const std::vector<double>& values) {
    if (values.empty()) return {0.0, 0.0};
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    if (values.size() == 1) return {mean, 0.0};
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    return {mean, std::sqrt(sq / static_cast<double>(values.size() - 1))};
}

std::string summary_csv_line(const SummaryRow& r) {
    std::ostringstream s;
    s << csv_field(r.label) << ',' << csv_field(r.target) << ',' << r.algorithm << ','
      << r.dimensions << ',' << r.population << ',' << r.iterations << ',' << r.budget << ','
      << r.repeats << ',' << join_seeds(r.seeds) << ',' << format_number(r.avg_best_cost) << ','
      << format_number(r.std_best_cost) << ','
      << (r.avg_runtime_s ? format_number(*r.avg_runtime_s) : std::string());
    return s.str();
}

std::string trace_jsonl(const RunResult& run) {
    std::string s = "{\"iteration\":0,\"best_cost\":" + format_number(run.initial_best_cost) + "}\n";
    for (std::size_t t = 0; t < run.best_cost_trace.size(); ++t) {
        s += "{\"iteration\":" + std::to_string(t + 1) +
             ",\"best_cost\":" + format_number(run.best_cost_trace[t]) + "}\n";
    }
    return s;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const Target target = resolve_target(config);

    ExperimentResult result;
    result.runs.resize(config.repeats);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t r = next++; r < config.repeats; r = next++) {
            try {
                result.runs[r] = run_once(config, target, config.base_seed + r);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min(config.threads, config.repeats);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    SummaryRow& row = result.summary;
    row.label = config.label;
    row.target = config.target();
    row.algorithm = to_string(config.algorithm);
    row.dimensions = target.space.dimension();
    row.population = config.population;
    row.iterations = config.iterations;
    row.budget = config.budget();
    row.repeats = config.repeats;
    std::vector<double> finals;
    double runtime = 0.0;
    for (const RunResult& run : result.runs) {
        if (run.status != RunStatus::ok) {
            throw std::runtime_error("objective returned no finite value for seed " +
                                     std::to_string(run.seed));
        }
        row.seeds.push_back(run.seed);
        finals.push_back(run.alpha_cost);
        runtime += run.elapsed_seconds;
    }
    std::tie(row.avg_best_cost, row.std_best_cost) = mean_and_std(finals);
    if (config.timing) row.avg_runtime_s = runtime / static_cast<double>(config.repeats);

    if (!config.out.empty()) {
        fs::create_directories(config.out / "traces");
        for (const RunResult& run : result.runs) {
            auto f = open_output(config.out / "traces" /
                                 ("run_" + std::to_string(run.seed) + ".jsonl"));
            f << trace_jsonl(run);
        }
        auto f = open_output(config.out / "summary.csv");
        f << kSummaryHeader << '\n' << summary_csv_line(row) << '\n';
    }
    return result;
}

std::vector<ExperimentConfig> parse_compare_spec(std::istream& in) {
    const auto sections = read_sections(in);
    std::vector<ExperimentConfig> configs;
    for (std::size_t s = 1; s < sections.size(); ++s) {
        ExperimentConfig c;
        c.label = sections[s].name;
        for (const auto& [k, v] : sections.front().settings) apply_setting(c, k, v);
        for (const auto& [k, v] : sections[s].settings) apply_setting(c, k, v);
        configs.push_back(std::move(c));
    }
    return configs;
}

std::vector<ExperimentConfig> load_compare_spec(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read compare spec " + path.string());
    return parse_compare_spec(in);
}

std::vector<CompareRow> compare(const std::vector<ExperimentConfig>& configs, const fs::path& out) {
    if (configs.size() < 2) throw ConfigError("compare needs at least two configs");
    for (const auto& c : configs) {
        if (c.budget() != configs.front().budget()) {
            throw ConfigError("unequal evaluation budgets");
        }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        std::string label = configs[i].label.empty() ? "config" + std::to_string(i + 1)
                                                     : configs[i].label;
        if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
            throw ConfigError("duplicate compare label '" + label + "'");
        }
        labels.push_back(std::move(label));
    }
    for (const auto& c : configs) c.validate();

    std::vector<CompareRow> rows;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        ExperimentConfig c = configs[i];
        c.label = labels[i];
        c.out = out.empty() ? fs::path{} : out / labels[i];
        rows.push_back({run_experiment(c).summary, false});
    }
    std::map<std::string, std::size_t> best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto [it, fresh] = best.try_emplace(rows[i].summary.target, i);
        if (!fresh && rows[i].summary.avg_best_cost < rows[it->second].summary.avg_best_cost) {
            it->second = i;
        }
    }
    for (const auto& [target, index] : best) rows[index].winner = true;

    if (!out.empty()) {
        fs::create_directories(out);
        auto f = open_output(out / "compare.csv");
        f << kCompareHeader << '\n';
        for (const auto& r : rows) f << compare_csv_line(r) << '\n';
    }
    return rows;
}

std::string compare_csv_line(const CompareRow& row) {
    return summary_csv_line(row.summary) + (row.winner ? ",1" : ",0");
}

void emit_landscape_grid(std::string_view function, std::size_t resolution, std::ostream& out) {
    if (resolution < 1) throw ConfigError("resolution must be at least 1");
    const auto& f = functions::lookup(function);
    if (!f.accepts_dimension(2)) {
        throw DimensionError("function " + f.name + " cannot be evaluated in 2-D");
    }
    const SearchSpace box = f.default_space(2);
    auto coord = [&](std::size_t d, std::size_t i) {
        if (resolution == 1) return 0.5 * (box.lower()[d] + box.upper()[d]);
        return box.lower()[d] +
               box.range(d) * static_cast<double>(i) / static_cast<double>(resolution - 1);
    };
    out << "x,y,f\n";
    for (std::size_t i = 0; i < resolution; ++i) {
        for (std::size_t j = 0; j < resolution; ++j) {
            const double xy[2] = {coord(0, i), coord(1, j)};
            out << format_number(xy[0]) << ',' << format_number(xy[1]) << ','
                << format_number(f.eval(xy)) << '\n';
        }
    }
}

}  // namespace vao::harness
