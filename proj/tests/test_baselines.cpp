#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "pesoa/benchmarks.hpp"
#include "pesoa/de.hpp"
#include "pesoa/pso.hpp"

using namespace pesoa;

namespace {

Problem sphere2()
{
    Problem p;
    p.name = "sphere2";
    p.dim = 2;
    p.lower = {-100.0, -100.0};
    p.upper = {100.0, 100.0};
    p.objective = [](const Vec& x, RngStream&) {
        return x[0] * x[0] + x[1] * x[1];
    };
    return p;
}

template <typename Runner>
void check_shared_contract(Runner run)
{
    const auto& e = find_benchmark("F09");
    Budget budget;
    budget.max_evaluations = 10000;

    RngStream a(303), b(303);
    const RunRecord ra = run(e.problem, budget, a);
    const RunRecord rb = run(e.problem, budget, b);

    // determinism
    REQUIRE(ra.trace.size() == rb.trace.size());
    for (std::size_t i = 0; i < ra.trace.size(); ++i)
        REQUIRE(ra.trace[i].best_value == rb.trace[i].best_value);

    // feasibility of the reported best
    REQUIRE(e.problem.contains(ra.final_best_position));

    // monotone best, strictly increasing eval counts, budget respected
    for (std::size_t i = 1; i < ra.trace.size(); ++i) {
        REQUIRE(ra.trace[i].best_value <= ra.trace[i - 1].best_value);
        REQUIRE(ra.trace[i].evaluations > ra.trace[i - 1].evaluations);
    }
    REQUIRE(ra.trace.back().evaluations <= 10000);
}

template <typename Runner>
double median_final(Runner run, const Problem& p, std::size_t evals, int seeds)
{
    std::vector<double> finals;
    for (int s = 1; s <= seeds; ++s) {
        Budget budget;
        budget.max_evaluations = evals;
        RngStream rng(static_cast<std::uint64_t>(s));
        finals.push_back(run(p, budget, rng).final_best_value);
    }
    std::sort(finals.begin(), finals.end());
    return finals[finals.size() / 2];
}

} // namespace

TEST_CASE("pso satisfies the shared optimizer contract")
{
    check_shared_contract([](const Problem& p, const Budget& b, RngStream& rng) {
        return run_pso(p, PsoConfig{}, b, rng);
    });
}

TEST_CASE("de satisfies the shared optimizer contract")
{
    check_shared_contract([](const Problem& p, const Budget& b, RngStream& rng) {
        return run_de(p, DeConfig{}, b, rng);
    });
}

TEST_CASE("zero-cycle budgets leave only the initialization point")
{
    Budget budget;
    budget.max_cycles = 0;
    const auto p = sphere2();
    RngStream r1(5), r2(5);
    REQUIRE(run_pso(p, PsoConfig{}, budget, r1).trace.size() == 1);
    REQUIRE(run_de(p, DeConfig{}, budget, r2).trace.size() == 1);
}

TEST_CASE("pso solves the 2-D sphere: median under 1e-3 in 20k evaluations")
{
    const double med = median_final(
        [](const Problem& p, const Budget& b, RngStream& rng) {
            return run_pso(p, PsoConfig{}, b, rng);
        },
        sphere2(), 20000, 10);
    REQUIRE(med < 1e-3);
}

TEST_CASE("de solves the 2-D sphere: median under 1e-3 in 20k evaluations")
{
    const double med = median_final(
        [](const Problem& p, const Budget& b, RngStream& rng) {
            return run_de(p, DeConfig{}, b, rng);
        },
        sphere2(), 20000, 10);
    REQUIRE(med < 1e-3);
}

TEST_CASE("baseline config validation")
{
    const auto p = sphere2();
    Budget budget;
    budget.max_evaluations = 100;

    PsoConfig pso;
    pso.inertia = 1.5;
    RngStream r1(1);
    REQUIRE_THROWS_AS(run_pso(p, pso, budget, r1), ConfigError);

    DeConfig de;
    de.crossover_rate = 1.5;
    RngStream r2(1);
    REQUIRE_THROWS_AS(run_de(p, de, budget, r2), ConfigError);
}
