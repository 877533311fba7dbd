#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qwsearch/gf.hpp"
#include "qwsearch/srg.hpp"

using namespace qws;

TEST_CASE("counting identity") {
    CHECK(check_feasibility({9, 4, 1, 2}));
    CHECK_FALSE(check_feasibility({8, 3, 0, 1}));  // 3*2 = 6 != 4*1
    CHECK(check_feasibility({10, 3, 0, 1}));       // 3*2 = 6 = 6*1, Petersen
}

TEST_CASE("counting identity is pure") {
    const SrgParams p{10, 3, 0, 1};
    CHECK(check_feasibility(p) == check_feasibility(p));
}

TEST_CASE("mu-undefined and malformed tuples are distinct errors, not false") {
    CHECK_THROWS_AS(check_feasibility({6, 5, 4, 1}), std::domain_error);
    CHECK_THROWS_AS(check_feasibility({6, 6, 4, 1}), std::domain_error);
    CHECK_THROWS_AS(check_feasibility({0, 3, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(check_feasibility({9, 4, -1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_feasibility({9, 4, 1, 0}), std::invalid_argument);
}

TEST_CASE("paley parameterization") {
    CHECK(paley_params(2) == SrgParams{9, 4, 1, 2});
    CHECK(paley_params(25) == SrgParams{101, 50, 24, 25});
    CHECK(paley_params(1) == SrgParams{5, 2, 0, 1});  // the 5-cycle
    CHECK_THROWS_AS(paley_params(5), std::invalid_argument);  // 21 = 3*7
    CHECK_THROWS_AS(paley_params(0), std::invalid_argument);
}

TEST_CASE("latin square parameterization") {
    CHECK(latin_params(3, 3) == SrgParams{9, 6, 3, 6});
    CHECK(latin_params(50, 3) == SrgParams{2500, 147, 50, 6});
    CHECK(latin_params(4, 2) == SrgParams{16, 6, 2, 2});  // 4x4 rook's graph
    CHECK_THROWS_AS(latin_params(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(latin_params(3, 4), std::invalid_argument);
}

TEST_CASE("triangular parameterization") {
    CHECK(triangular_params(5) == SrgParams{10, 6, 3, 4});
    CHECK(triangular_params(7) == SrgParams{21, 10, 5, 4});
    CHECK_THROWS_AS(triangular_params(4), std::invalid_argument);
}

TEST_CASE("every family tuple is feasible and satisfies the degree bound") {
    for (std::int64_t t = 1; t <= 100; ++t) {
        if (!is_prime_power(4 * t + 1)) continue;
        const SrgParams p = paley_params(t);
        CHECK(check_feasibility(p));
        CHECK(degree_bound_holds(p));
    }
    for (std::int64_t t = 2; t <= 20; ++t) {
        for (std::int64_t d = 2; d <= t; ++d) {
            const SrgParams p = latin_params(t, d);
            CHECK(check_feasibility(p));
            CHECK(degree_bound_holds(p));
        }
    }
    for (std::int64_t m = 5; m <= 40; ++m) {
        const SrgParams p = triangular_params(m);
        CHECK(check_feasibility(p));
        CHECK(degree_bound_holds(p));
    }
}

TEST_CASE("graph family descriptors") {
    const GraphFamily paley = GraphFamily::paley(101);
    CHECK(paley.vertex_count() == 101);
    CHECK(paley.srg_params() == SrgParams{101, 50, 24, 25});
    CHECK(paley.name() == "paley(q=101)");

    const GraphFamily latin = GraphFamily::latin_square(50, 3);
    CHECK(latin.vertex_count() == 2500);
    CHECK(latin.name() == "latin(t=50,d=3)");

    const GraphFamily tri = GraphFamily::triangular(7);
    CHECK(tri.vertex_count() == 21);

    const GraphFamily complete = GraphFamily::complete(6);
    CHECK(complete.vertex_count() == 6);
    CHECK_FALSE(complete.is_srg());
    CHECK_THROWS_AS(complete.srg_params(), std::domain_error);

    CHECK_THROWS_AS(GraphFamily::paley(15), std::invalid_argument);
    CHECK_THROWS_AS(GraphFamily::paley(7), std::invalid_argument);
    CHECK_THROWS_AS(GraphFamily::complete(1), std::invalid_argument);
    CHECK_THROWS_AS(GraphFamily::latin_square(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(GraphFamily::triangular(4), std::invalid_argument);
}

TEST_CASE("full parameter validation") {
    CHECK_NOTHROW(validate_srg_params({101, 50, 24, 25}));
    CHECK_THROWS_AS(validate_srg_params({8, 3, 0, 1}), std::domain_error);
    // identity holds but mu > k: not a realizable tuple
    CHECK_THROWS_AS(validate_srg_params({10, 6, 1, 8}), std::domain_error);
}
