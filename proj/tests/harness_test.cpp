#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vao/harness.hpp"

using namespace vao;
using namespace vao::harness;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("vao_harness_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

ExperimentConfig from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

struct Cli {
    int status;
    std::string out;
    std::string err;
};

Cli run_cli(const std::string& args, const std::string& tag) {
    const fs::path dir = scratch_dir("cli_" + tag);
    const std::string cmd = std::string(VAO_CLI_PATH) + " " + args + " > " +
                            (dir / "out.txt").string() + " 2> " + (dir / "err.txt").string();
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(dir / "out.txt"), slurp(dir / "err.txt")};
}

}  // namespace

TEST_CASE("config parsing") {
    const auto c = from_text(
        "# booth run\n"
        "algo = pso\n"
        "function = booth\n"
        "pop = 12   # trailing comment\n"
        "iters=40\n"
        "repeats = 3\n"
        "seed = 100\n"
        "lower = -4.5\n"
        "upper = 4.5\n"
        "timing = true\n"
        "label = b\n");
    CHECK(c.algorithm == Algorithm::pso);
    CHECK(c.function == "booth");
    CHECK(c.population == 12);
    CHECK(c.iterations == 40);
    CHECK(c.repeats == 3);
    CHECK(c.base_seed == 100);
    CHECK(*c.lower == -4.5);
    CHECK(*c.upper == 4.5);
    CHECK(c.timing);
    CHECK(c.label == "b");
    CHECK(c.budget() == 12 * 41);
    CHECK_NOTHROW(c.validate());

    CHECK_THROWS_AS(from_text("colour = red\n"), ConfigError);
    CHECK_THROWS_AS(from_text("pop = many\n"), ConfigError);
    CHECK_THROWS_AS(from_text("pop 5\n"), ConfigError);
    CHECK_THROWS_AS(from_text("algo = annealing\n"), ConfigError);
    CHECK_THROWS_AS(from_text("function = booth\nproblem = mst\n").validate(), ConfigError);
    CHECK_THROWS_AS(from_text("repeats = 3\n").validate(), ConfigError);
    CHECK_THROWS_AS(from_text("function = booth\nrepeats = 0\n").validate(), ConfigError);
    CHECK_THROWS_AS(from_text("function = booth\nlower = 3\nupper = 1\n").validate(), ConfigError);
    CHECK_THROWS_AS(from_text("function = booth\nmutation_rate = 2\n").validate(), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/run.cfg"), ConfigError);
    CHECK(parse_algorithm("random") == Algorithm::random);
    CHECK(to_string(Algorithm::de) == "de");
}

TEST_CASE("targets") {
    auto c = from_text("function = powell\n");
    CHECK(resolve_target(c).space.dimension() == 4);
    c.dimensions = 8;
    CHECK(resolve_target(c).space.dimension() == 8);
    c.dimensions = 6;
    CHECK_THROWS_AS(resolve_target(c), DimensionError);

    c = from_text("function = booth\nlower = -1\nupper = 2\n");
    const auto box = resolve_target(c).space;
    CHECK(box.lower() == std::vector<double>{-1, -1});
    CHECK(box.upper() == std::vector<double>{2, 2});

    CHECK(resolve_target(from_text("problem = ed\n")).space.dimension() == 6);
    CHECK(resolve_target(from_text("problem = pms\n")).space.dimension() == 20);
    CHECK(resolve_target(from_text("problem = mst\n")).space.dimension() == 22 * 21 / 2);
    CHECK(resolve_target(from_text("problem = hla\n")).space.dimension() == 8);
    CHECK(resolve_target(from_text("problem = cluster\n")).space.dimension() == 12);
    CHECK_THROWS_AS(resolve_target(from_text("problem = tsp\n")), ConfigError);

    const auto pms = vao_params_for(from_text("problem = pms\nmutation_rate = 0.3\n"), 9);
    CHECK(pms.mutation_rate == 0.3);
    CHECK(pms.attraction_base == 0.2);
    CHECK(pms.seed == 9);
    CHECK(vao_params_for(from_text("function = booth\npop = 7\n"), 2).population_size == 7);
}

TEST_CASE("mean and sample deviation") {
    CHECK(mean_and_std({4.0}) == std::pair<double, double>{4.0, 0.0});
    const auto [m, s] = mean_and_std({1.0, 2.0, 3.0, 4.0});
    CHECK(m == 2.5);
    CHECK(s == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("experiment files agree with the in-memory runs") {
    const fs::path dir = scratch_dir("coherence");
    auto c = from_text("function = rastrigin\ndims = 5\npop = 10\niters = 30\nrepeats = 4\nseed = 11\n");
    c.out = dir;
    c.threads = 3;
    const auto result = run_experiment(c);
    REQUIRE(result.runs.size() == 4);
    CHECK(result.summary.seeds == std::vector<std::uint64_t>{11, 12, 13, 14});

    std::vector<double> finals;
    for (std::size_t r = 0; r < 4; ++r) {
        const fs::path trace = dir / "traces" / ("run_" + std::to_string(11 + r) + ".jsonl");
        REQUIRE(fs::exists(trace));
        const auto lines = lines_of(slurp(trace));
        REQUIRE(lines.size() == 31);
        double previous = INFINITY;
        for (std::size_t t = 0; t < lines.size(); ++t) {
            const auto j = nlohmann::json::parse(lines[t]);
            REQUIRE(j.at("iteration").get<std::size_t>() == t);
            const double v = j.at("best_cost").get<double>();
            REQUIRE(v <= previous);
            if (t > 0) REQUIRE(v == result.runs[r].best_cost_trace[t - 1]);
            previous = v;
        }
        finals.push_back(previous);
        CHECK(previous == result.runs[r].alpha_cost);
    }

    double mean = 0.0;
    for (double v : finals) mean += v / 4.0;
    double ss = 0.0;
    for (double v : finals) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / 3.0);

    const auto summary = lines_of(slurp(dir / "summary.csv"));
    REQUIRE(summary.size() == 2);
    CHECK(summary[0] == kSummaryHeader);
    const auto cells = split_csv(summary[1]);
    REQUIRE(cells.size() == 12);
    CHECK(cells[1] == "rastrigin");
    CHECK(cells[2] == "vao");
    CHECK(cells[3] == "5");
    CHECK(cells[6] == "310");
    CHECK(cells[7] == "4");
    CHECK(cells[8] == "11;12;13;14");
    CHECK(std::stod(cells[9]) == doctest::Approx(mean).epsilon(1e-12));
    CHECK(std::stod(cells[10]) == doctest::Approx(sd).epsilon(1e-12));
    CHECK(cells[11].empty());
}

TEST_CASE("reruns are byte-identical and single repeats have zero spread") {
    const fs::path a = scratch_dir("rerun_a");
    const fs::path b = scratch_dir("rerun_b");
    for (const char* algo : {"vao", "pso", "de", "random"}) {
        auto c = from_text("function = ackley\ndims = 6\npop = 8\niters = 25\nrepeats = 1\nseed = 5\n");
        c.algorithm = parse_algorithm(algo);
        c.out = a;
        const auto r1 = run_experiment(c);
        c.out = b;
        c.threads = 4;
        run_experiment(c);
        CAPTURE(algo);
        CHECK(r1.summary.std_best_cost == 0.0);
        CHECK(slurp(a / "summary.csv") == slurp(b / "summary.csv"));
        CHECK(slurp(a / "traces" / "run_5.jsonl") == slurp(b / "traces" / "run_5.jsonl"));
    }
}

TEST_CASE("timing column") {
    auto c = from_text("function = booth\npop = 5\niters = 5\nrepeats = 2\ntiming = 1\n");
    const auto r = run_experiment(c);
    REQUIRE(r.summary.avg_runtime_s);
    CHECK(*r.summary.avg_runtime_s >= 0.0);
    CHECK_FALSE(split_csv(summary_csv_line(r.summary))[11].empty());
}

TEST_CASE("compare on Booth") {
    std::istringstream spec(
        "function = booth\n"
        "pop = 20\n"
        "iters = 100\n"
        "repeats = 5\n"
        "[vao]\n"
        "algo = vao\n"
        "[pso]\n"
        "algo = pso\n"
        "[de]\n"
        "algo = de\n");
    const auto configs = parse_compare_spec(spec);
    REQUIRE(configs.size() == 3);
    CHECK(configs[1].label == "pso");
    CHECK(configs[2].iterations == 100);

    const fs::path dir = scratch_dir("compare");
    const auto rows = compare(configs, dir);
    REQUIRE(rows.size() == 3);
    std::size_t winners = 0;
    double best = INFINITY;
    for (const auto& row : rows) best = std::min(best, row.summary.avg_best_cost);
    for (const auto& row : rows) {
        if (row.winner) {
            ++winners;
            CHECK(row.summary.avg_best_cost == best);
        }
    }
    CHECK(winners == 1);
    const auto table = lines_of(slurp(dir / "compare.csv"));
    REQUIRE(table.size() == 4);
    CHECK(table[0] == kCompareHeader);
    for (std::size_t i = 0; i < 3; ++i) CHECK(table[i + 1] == compare_csv_line(rows[i]));
    CHECK(fs::exists(dir / "pso" / "summary.csv"));
    CHECK(fs::exists(dir / "de" / "traces" / "run_1.jsonl"));
}

TEST_CASE("compare rejects unequal budgets") {
    std::istringstream spec(
        "function = booth\nrepeats = 2\n"
        "[a]\niters = 500\n"
        "[b]\niters = 400\n");
    const auto configs = parse_compare_spec(spec);
    try {
        compare(configs);
        FAIL("expected a budget error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("unequal evaluation budgets") != std::string::npos);
    }
    CHECK_THROWS_AS(compare({configs[0]}), ConfigError);
    std::istringstream stray("function = booth\n[a]\n[a]\n");
    CHECK_THROWS_AS(compare(parse_compare_spec(stray)), ConfigError);
}

TEST_CASE("VAO beats random search on De Jong 15D") {
    std::istringstream spec(
        "function = dejong\ndims = 15\nrepeats = 5\nthreads = 4\n"
        "[vao]\nalgo = vao\n"
        "[random]\nalgo = random\n");
    const auto rows = compare(parse_compare_spec(spec));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].winner);
    CHECK_FALSE(rows[1].winner);
    CHECK(rows[0].summary.avg_best_cost < rows[1].summary.avg_best_cost);
}

TEST_CASE("landscape grids") {
    std::ostringstream center;
    emit_landscape_grid("booth", 1, center);
    const auto one = lines_of(center.str());
    REQUIRE(one.size() == 2);
    CHECK(one[0] == "x,y,f");
    CHECK(one[1] == "0,0,74");

    std::ostringstream grid;
    emit_landscape_grid("booth", 3, grid);
    const auto nine = lines_of(grid.str());
    REQUIRE(nine.size() == 10);
    CHECK(nine[1] == "-10,-10,2594");
    CHECK(nine[5] == "0,0,74");

    std::ostringstream easom;
    emit_landscape_grid("easom", 41, easom);
    const auto rows = lines_of(easom.str());
    REQUIRE(rows.size() == 41 * 41 + 1);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split_csv(rows[i]);
        REQUIRE(cells.size() == 3);
        REQUIRE(std::strtod(cells[2].c_str(), nullptr) >= -1.0);
    }

    std::ostringstream sink;
    CHECK_THROWS_AS(emit_landscape_grid("powell", 5, sink), DimensionError);
    CHECK_THROWS_AS(emit_landscape_grid("booth", 0, sink), ConfigError);
}

TEST_CASE("CLI success output") {
    const fs::path dir = scratch_dir("cli_ok_out");
    const auto ok = run_cli("run --function booth --pop 6 --iters 10 --repeats 2 --out " + dir.string(),
                            "ok");
    CHECK(ok.status == 0);
    CHECK(ok.err.empty());
    const auto out = lines_of(ok.out);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == kSummaryHeader);
    CHECK(out[1] == lines_of(slurp(dir / "summary.csv"))[1]);
}

TEST_CASE("CLI errors are one line and nonzero") {
    const std::vector<std::string> bad = {
        "run --function nosuch",
        "run --algo annealing --function booth",
        "run --function powell --dims 6",
        "run --function booth --pop 0",
        "run --config /nonexistent/run.cfg",
        "landscape --function powell --res 5",
        "compare --spec /nonexistent/spec.ini",
        "frobnicate",
    };
    for (std::size_t i = 0; i < bad.size(); ++i) {
        const auto r = run_cli(bad[i], "bad" + std::to_string(i));
        CAPTURE(bad[i]);
        CHECK(r.status != 0);
        const auto err = lines_of(r.err);
        CHECK(err.size() == 1);
        if (!err.empty()) CHECK(err[0].rfind("error: ", 0) == 0);
    }
}
