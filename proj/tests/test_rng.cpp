#include <catch2/catch_amalgamated.hpp>

#include "pesoa/rng.hpp"

using pesoa::RngStream;

TEST_CASE("equal seeds produce identical sequences")
{
    RngStream a(12345), b(12345);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(a.uniform01() == b.uniform01());
}

TEST_CASE("uniform01 stays in the open unit interval")
{
    RngStream rng(7);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("uniform respects its interval")
{
    RngStream rng(11);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform(-3.5, 2.25);
        REQUIRE(u >= -3.5);
        REQUIRE(u <= 2.25);
    }
}

TEST_CASE("uniform_int covers [0, n) and nothing else")
{
    RngStream rng(3);
    std::array<int, 7> hits{};
    for (int i = 0; i < 20000; ++i) {
        const auto v = rng.uniform_int(7);
        REQUIRE(v < 7);
        ++hits[v];
    }
    for (int h : hits)
        REQUIRE(h > 0);
}

TEST_CASE("child streams are reproducible and distinct")
{
    RngStream parent(99);
    RngStream c0 = parent.child(0);
    RngStream c0_again = RngStream(99).child(0);
    RngStream c1 = parent.child(1);
    REQUIRE(c0.uniform01() == c0_again.uniform01());
    REQUIRE(RngStream(99).child(0).uniform01() != c1.uniform01());
}

TEST_CASE("different seeds diverge")
{
    RngStream a(1), b(2);
    int equal = 0;
    for (int i = 0; i < 100; ++i)
        if (a.uniform01() == b.uniform01())
            ++equal;
    REQUIRE(equal == 0);
}
