#include <catch2/catch_amalgamated.hpp>

#include "pesoa/core.hpp"

using namespace pesoa;

namespace {

Problem unit_box(int dim)
{
    Problem p;
    p.name = "unit";
    p.dim = dim;
    p.lower.assign(dim, 0.0);
    p.upper.assign(dim, 1.0);
    p.objective = [](const Vec& x, RngStream&) {
        double s = 0.0;
        for (double v : x)
            s += v * v;
        return s;
    };
    return p;
}

} // namespace

TEST_CASE("clamp_to_bounds leaves feasible points alone")
{
    const auto p = unit_box(1);
    REQUIRE(clamp_to_bounds({0.5}, p) == Vec{0.5});
    REQUIRE(clamp_to_bounds({1.0}, p) == Vec{1.0}); // boundary is feasible
}

TEST_CASE("clamp_to_bounds projects out-of-box coordinates")
{
    const auto p = unit_box(2);
    REQUIRE(clamp_to_bounds({-2.0, 3.0}, p) == Vec{0.0, 1.0});
}

TEST_CASE("clamp_to_bounds is idempotent on random points")
{
    Problem p = unit_box(5);
    p.lower = {-3, -1, 0, 2, -10};
    p.upper = {3, 0, 1, 7, 10};
    RngStream rng(42);
    for (int i = 0; i < 500; ++i) {
        Vec x(5);
        for (auto& v : x)
            v = rng.uniform(-20.0, 20.0);
        const Vec once = clamp_to_bounds(x, p);
        REQUIRE(clamp_to_bounds(once, p) == once);
        REQUIRE(p.contains(once));
    }
}

TEST_CASE("clamp_to_bounds rejects dimension mismatch")
{
    const auto p = unit_box(2);
    REQUIRE_THROWS_AS(clamp_to_bounds({0.5}, p), ConfigError);
}

TEST_CASE("evaluate counts and returns the objective")
{
    const auto p = unit_box(3);
    EvalCounter counter;
    RngStream rng(1);
    REQUIRE(counter.count == 0);
    REQUIRE(evaluate(p, {0.0, 0.0, 0.0}, counter, rng) == 0.0);
    REQUIRE(counter.count == 1);
    REQUIRE(evaluate(p, {1.0, 1.0, 1.0}, counter, rng) == 3.0);
    REQUIRE(counter.count == 2);
}

TEST_CASE("evaluate is deterministic for non-noisy objectives")
{
    const auto p = unit_box(4);
    EvalCounter counter;
    RngStream rng(5);
    const Vec x{0.1, 0.2, 0.3, 0.4};
    REQUIRE(evaluate(p, x, counter, rng) == evaluate(p, x, counter, rng));
}

TEST_CASE("evaluate aborts on non-finite objective values")
{
    Problem p = unit_box(1);
    p.objective = [](const Vec&, RngStream&) {
        return std::numeric_limits<double>::quiet_NaN();
    };
    EvalCounter counter;
    RngStream rng(1);
    REQUIRE_THROWS_AS(evaluate(p, {0.5}, counter, rng), ObjectiveError);
}

TEST_CASE("problem validation flags inverted bounds")
{
    Problem p = unit_box(2);
    p.lower[1] = 2.0; // above upper[1]
    REQUIRE_THROWS_AS(p.validate(), ConfigError);
}
