#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vao/test_functions.hpp"

using namespace vao;
using namespace vao::functions;

namespace {

struct HandValue {
    const char* name;
    std::vector<double> x;
    double f;
};

// Values from a separate scalar transcription of each formula (not this library).
const std::vector<HandValue> kHandValues = {
    {"ackley", {0.3, -0.7, 1.1, 2.0}, 5.648722303857877},
    {"powell", {0.3, -0.7, 1.1, 2.0}, 203.18910000000002},
    {"rastrigin", {0.3, -0.7, 1.1, 2.0}, 33.88016994374948},
    {"booth", {0.5, -1.2}, 106.25000000000001},
    {"zakharov", {0.3, -0.7, 1.1, 2.0}, 708.3200999999998},
    {"michalewicz", {2.0, 1.0}, -0.37016851908256937},
    {"beale", {0.5, -1.2}, 7.851020999999999},
    {"matyas", {0.5, -1.2}, 0.7274},
    {"trid", {0.3, -0.7, 1.1, 2.0}, 3.1699999999999995},
    {"schwefel_paper", {0.3, -0.7, 1.1, 2.0}, -3.1620000000000004},
    {"easom", {3.0, 3.5}, -0.7991439167805361},
    {"rosenbrock", {0.3, -0.7, 1.1, 2.0}, 165.41999999999996},
    {"bohachevsky", {0.5, -1.2}, 4.153606797749979},
    {"bukin6", {-8.0, 0.5}, 37.43657386773942},
    {"branin", {1.0, 4.0}, 15.47709507916227},
    {"eggholder", {100.0, -50.0}, 67.87229946408353},
    {"crossintray", {0.5, -1.2}, -1.9497957459779447},
    {"griewank", {0.3, -0.7, 1.1, 2.0}, 0.635790746267223},
    {"goldstein", {0.5, -1.2}, 732.72176144},
    {"dixon", {0.3, -0.7, 1.1, 2.0}, 221.05800000000005},
    {"levy", {0.3, -0.7, 1.1, 2.0}, 0.868162281529886},
    {"bird", {0.5, -1.2}, 4.085095642358629},
    {"dejong", {0.3, -0.7, 1.1, 2.0}, 5.79},
};

}  // namespace

TEST_CASE("registry has the 24 functions once each") {
    const auto& r = registry();
    CHECK(r.size() == 24);
    std::set<std::string> names;
    for (const auto& f : r) names.insert(f.name);
    CHECK(names.size() == 24);
    for (const char* n : {"ackley", "powell", "rastrigin", "pyramid", "booth", "zakharov", "dejong",
                          "michalewicz", "beale", "matyas", "trid", "schwefel", "easom",
                          "rosenbrock", "bohachevsky", "bukin6", "branin", "eggholder",
                          "crossintray", "griewank", "goldstein", "dixon", "levy", "bird"}) {
        CHECK_NOTHROW(lookup(n));
    }
    CHECK(lookup("schwefel").name == "schwefel_paper");
}

TEST_CASE("default bounds") {
    const auto booth = lookup("booth").default_space(2);
    CHECK(booth.lower() == std::vector<double>{-10, -10});
    CHECK(booth.upper() == std::vector<double>{10, 10});
    const auto bukin = lookup("bukin6").default_space(2);
    CHECK(bukin.lower() == std::vector<double>{-15, -3});
    CHECK(bukin.upper() == std::vector<double>{-5, 3});
    CHECK(lookup("dejong").default_space(15).dimension() == 15);
}

TEST_CASE("hand-evaluated values at non-optimal points") {
    for (const auto& h : kHandValues) {
        CAPTURE(h.name);
        const double got = evaluate(h.name, h.x);
        CHECK(got == doctest::Approx(h.f).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("griewank at (100, 100)") {
    const double expected =
        1.0 + (100.0 * 100.0 + 100.0 * 100.0) / 4000.0 - std::cos(100.0) * std::cos(100.0 / std::sqrt(2.0));
    const std::vector<double> x{100.0, 100.0};
    CHECK(evaluate("griewank", x) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected == doctest::Approx(6.0214207401607025).epsilon(1e-12));
}

TEST_CASE("paper examples") {
    CHECK(std::abs(evaluate("ackley", std::vector<double>(15, 0.0))) <= 1e-12);
    CHECK(evaluate("booth", std::vector<double>{1, 3}) == 0.0);
    CHECK(std::abs(evaluate("michalewicz", std::vector<double>{2.20319, 1.57049}) + 1.8013) <=
          1e-4);
    CHECK(evaluate("rosenbrock", std::vector<double>(7, 1.0)) == 0.0);

    const auto egg = known_optimum("eggholder");
    REQUIRE(egg);
    CHECK(egg->points.front() == std::vector<double>{512.0, 404.2319});
    CHECK(egg->value == -959.6407);
    const auto cit = known_optimum("crossintray");
    REQUIRE(cit);
    CHECK(cit->points.size() == 4);
    CHECK(cit->value == doctest::Approx(-2.0626).epsilon(1e-4));
    const auto bird = known_optimum("bird");
    REQUIRE(bird);
    CHECK(bird->points.front() == std::vector<double>{4.70104, 3.15294});
    CHECK(bird->value == -106.764537);
}

TEST_CASE("optimum oracle for every registered optimum") {
    for (const auto& f : registry()) {
        for (std::size_t dim : {2, 3, 4, 8, 15}) {
            if (!f.accepts_dimension(dim) || dim < f.min_dimension) continue;
            const auto opt = f.optimum(dim);
            if (!opt) continue;
            for (const auto& x : opt->points) {
                CAPTURE(f.name);
                CAPTURE(dim);
                CHECK(std::abs(f.eval(x) - opt->value) <= opt->tolerance);
            }
        }
    }
}

TEST_CASE("literature optimum values") {
    CHECK(known_optimum("trid", 6)->value == -50.0);
    CHECK(known_optimum("trid", 10)->value == -210.0);
    CHECK(known_optimum("easom")->value == -1.0);
    CHECK(known_optimum("branin")->value == doctest::Approx(0.397887).epsilon(1e-6));
    CHECK(known_optimum("goldstein")->value == 3.0);
    CHECK(known_optimum("bukin6")->points.front() == std::vector<double>{-10.0, 1.0});
    CHECK_FALSE(known_optimum("pyramid"));
    CHECK_FALSE(known_optimum("schwefel"));
    CHECK_FALSE(known_optimum("michalewicz", 5));
    CHECK(known_optimum("powell", 8)->points.front() == std::vector<double>(8, 0.0));
}

TEST_CASE("local minimality around any-D optima") {
    std::mt19937_64 rng(2024);
    for (const auto& f : registry()) {
        if (f.arity == Arity::fixed_two) continue;
        const std::size_t dim = f.arity == Arity::multiple_of_4 ? 8 : 6;
        const auto opt = f.optimum(dim);
        if (!opt) continue;
        const auto& x = opt->points.front();
        const double base = f.eval(x);
        std::uniform_int_distribution<std::size_t> axis(0, dim - 1);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t k = axis(rng);
            for (double delta : {1e-4, -1e-4}) {
                auto y = x;
                y[k] += delta;
                CAPTURE(f.name);
                CHECK(f.eval(y) >= base - 1e-9);
            }
        }
    }
}

TEST_CASE("symmetric functions") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::size_t count = 0;
    for (const auto& f : registry()) {
        if (!f.symmetric) continue;
        ++count;
        const std::size_t dim = f.natural_dimension();
        for (int i = 0; i < 100; ++i) {
            std::vector<double> x(dim);
            for (double& v : x) v = u(rng);
            auto neg = x;
            for (double& v : neg) v = -v;
            CAPTURE(f.name);
            CHECK(f.eval(x) == doctest::Approx(f.eval(neg)).epsilon(1e-12));
        }
    }
    for (const char* n : {"ackley", "rastrigin", "dejong", "griewank", "bohachevsky", "matyas"}) {
        CHECK(lookup(n).symmetric);
    }
    CHECK(count >= 6);
}

TEST_CASE("purity") {
    const std::vector<double> x{0.25, -1.5};
    for (const auto& f : registry()) {
        if (!f.accepts_dimension(2)) continue;
        const double a = f.eval(x);
        const double b = f.eval(x);
        CHECK(((a == b) || (std::isnan(a) && std::isnan(b))));
    }
}

TEST_CASE("dimension and name errors") {
    const std::vector<double> three{1, 2, 3};
    CHECK_THROWS_AS(evaluate("booth", three), DimensionError);
    CHECK_THROWS_AS(evaluate("powell", three), DimensionError);
    CHECK_THROWS_AS(make_objective("eggholder", 5), DimensionError);
    CHECK_THROWS_AS(lookup("nosuch"), ConfigError);
    try {
        lookup("nosuch");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("booth") != std::string::npos);
    }
    CHECK_THROWS_AS((void)lookup("booth").default_space(3), DimensionError);
    CHECK(lookup("powell").natural_dimension() == 4);
    CHECK(lookup("booth").natural_dimension() == 2);
    CHECK(make_objective("dejong", 3)(three) == 14.0);
}
