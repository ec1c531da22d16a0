// Command-line front end for the experiment harness.
//
//   vao run --algo vao --function dejong --dims 15 --repeats 10 --seed 1 --out runs/dejong
//   vao run --config experiment.cfg --iters 200
//   vao compare --spec compare.cfg --out runs/cmp
//   vao landscape --function booth --res 50 --out booth.csv
//
// Exit status: 0 success, 2 invalid usage or configuration, 1 other failures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "vao/harness.hpp"

namespace {

using vao::harness::ExperimentConfig;

int fail(int code, const std::string& message) {
    std::string line = message;
    for (char& c : line) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    std::cerr << "error: " << line << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Victoria Amazonica optimizer experiments"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "seeded repeated runs of one algorithm on one target");
    std::string config_file;
    std::map<std::string, std::string> flags;
    run->add_option("--config", config_file, "key = value file; flags override it");
    for (const char* key : {"algo", "function", "problem", "instance", "dims", "lower", "upper",
                            "pop", "iters", "repeats", "seed", "clusters", "facilities",
                            "mutation_rate", "mutation_damping", "mutation_sigma_frac",
                            "attraction_base", "out", "threads", "label"}) {
        std::string flag = std::string("--") + key;
        for (char& c : flag) {
            if (c == '_') c = '-';
        }
        run->add_option(flag, flags[key]);
    }
    bool timing = false;
    run->add_flag("--timing", timing, "report wall time (output is then not reproducible)");

    auto* cmp = app.add_subcommand("compare", "run several configs with equal budgets");
    std::string spec_file;
    std::string compare_out;
    cmp->add_option("--spec", spec_file, "compare spec file")->required();
    cmp->add_option("--out", compare_out, "output directory");

    auto* land = app.add_subcommand("landscape", "x,y,f grid of a 2-D function");
    std::string land_function;
    std::size_t resolution = 50;
    std::string land_out;
    land->add_option("--function", land_function)->required();
    land->add_option("--res", resolution, "points per axis");
    land->add_option("--out", land_out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(2, e.what());
    }

    try {
        if (*run) {
            ExperimentConfig config =
                config_file.empty() ? ExperimentConfig{} : vao::harness::load_config(config_file);
            for (const auto& [key, value] : flags) {
                std::string flag = "--" + key;
                for (char& c : flag) {
                    if (c == '_') c = '-';
                }
                if (run->count(flag) > 0) vao::harness::apply_setting(config, key, value);
            }
            if (timing) config.timing = true;
            const auto result = vao::harness::run_experiment(config);
            std::cout << vao::harness::kSummaryHeader << '\n'
                      << vao::harness::summary_csv_line(result.summary) << '\n';
        } else if (*cmp) {
            const auto configs = vao::harness::load_compare_spec(spec_file);
            const auto rows = vao::harness::compare(configs, compare_out);
            std::cout << vao::harness::kCompareHeader << '\n';
            for (const auto& r : rows) std::cout << vao::harness::compare_csv_line(r) << '\n';
        } else if (*land) {
            if (land_out.empty()) {
                vao::harness::emit_landscape_grid(land_function, resolution, std::cout);
            } else {
                std::ofstream out(land_out, std::ios::binary);
                if (!out) return fail(1, "cannot write " + land_out);
                vao::harness::emit_landscape_grid(land_function, resolution, out);
            }
        }
    } catch (const std::invalid_argument& e) {
        return fail(2, e.what());
    } catch (const std::exception& e) {
        return fail(1, e.what());
    }
    return 0;
}
