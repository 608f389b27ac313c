#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "pesoa/benchmarks.hpp"

using namespace pesoa;

TEST_CASE("registry holds 20 entries with unique ids")
{
    const auto& r = registry();
    REQUIRE(r.size() == 20);
    std::set<std::string> ids;
    for (const auto& e : r)
        ids.insert(e.id);
    REQUIRE(ids.size() == 20);
}

TEST_CASE("entries resolve by id and by alias")
{
    REQUIRE(find_benchmark("F13").problem.name == "rastrigin10");
    REQUIRE(find_benchmark("rastrigin10").id == "F13");
    REQUIRE(find_benchmark("sphere").id == "F20");
    REQUIRE_THROWS_AS(find_benchmark("F99"), ConfigError);
}

TEST_CASE("known minimizers reproduce known optima")
{
    EvalCounter counter;
    RngStream rng(1);
    for (const auto& e : registry()) {
        if (!e.problem.known_optimum || !e.problem.known_minimizer)
            continue;
        const double v = evaluate(e.problem, *e.problem.known_minimizer, counter, rng);
        INFO(e.id << " (" << e.problem.name << ")");
        REQUIRE(std::abs(v - *e.problem.known_optimum) <= e.optimum_tolerance);
        REQUIRE(e.problem.contains(*e.problem.known_minimizer));
    }
}

TEST_CASE("spot values at literature minimizers")
{
    EvalCounter counter;
    RngStream rng(1);
    // Branin at (pi, 2.275)
    REQUIRE(std::abs(eval_entry("F07", {std::numbers::pi, 2.275}, counter, rng) -
                     0.397887) < 1e-4);
    // minima at the origin
    REQUIRE(eval_entry("F20", Vec(30, 0.0), counter, rng) == 0.0);
    REQUIRE(eval_entry("F13", Vec(10, 0.0), counter, rng) == 0.0);
    REQUIRE(std::abs(eval_entry("F08", Vec(30, 0.0), counter, rng)) < 1e-12);
    // Rosenbrock at all-ones
    REQUIRE(eval_entry("F16", Vec(10, 1.0), counter, rng) == 0.0);
}

TEST_CASE("reported bests never beat the reference optimum beyond tolerance")
{
    for (const auto& e : registry()) {
        if (!e.problem.known_optimum)
            continue;
        INFO(e.id);
        // loose tolerance: a couple of the published means sit slightly
        // below the true optimum
        REQUIRE(*e.problem.known_optimum <= e.reported_best + 0.05);
    }
}

TEST_CASE("symmetric functions satisfy f(x) = f(-x)")
{
    RngStream rng(77);
    EvalCounter counter;
    for (const std::string id : {"F20", "F13", "F08", "F09"}) {
        const auto& e = find_benchmark(id);
        for (int i = 0; i < 200; ++i) {
            Vec x(e.problem.dim), nx(e.problem.dim);
            for (int d = 0; d < e.problem.dim; ++d) {
                x[d] = rng.uniform(e.problem.lower[d], e.problem.upper[d]);
                nx[d] = -x[d];
            }
            REQUIRE(evaluate(e.problem, x, counter, rng) ==
                    evaluate(e.problem, nx, counter, rng));
        }
    }
}

TEST_CASE("sphere, rastrigin and griewank are non-negative")
{
    RngStream rng(88);
    EvalCounter counter;
    for (const std::string id : {"F20", "F13", "F09"}) {
        const auto& e = find_benchmark(id);
        for (int i = 0; i < 500; ++i) {
            Vec x(e.problem.dim);
            for (int d = 0; d < e.problem.dim; ++d)
                x[d] = rng.uniform(e.problem.lower[d], e.problem.upper[d]);
            REQUIRE(evaluate(e.problem, x, counter, rng) >= 0.0);
        }
    }
}

TEST_CASE("quartic noise draws from the passed stream only")
{
    const auto& e = find_benchmark("F12");
    const Vec x(30, 0.1);
    EvalCounter counter;
    RngStream a(5), b(5);
    // same stream state, same noise
    REQUIRE(evaluate(e.problem, x, counter, a) == evaluate(e.problem, x, counter, b));
    // consumed stream, different noise
    RngStream c = b.child(3);
    REQUIRE(evaluate(e.problem, x, counter, a) != evaluate(e.problem, x, counter, c));
}

TEST_CASE("eval_entry rejects dimension mismatch")
{
    EvalCounter counter;
    RngStream rng(1);
    REQUIRE_THROWS_AS(eval_entry("F13", Vec(9, 0.0), counter, rng), ConfigError);
}
