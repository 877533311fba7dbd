#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <vector>

#include "qwsearch/graph.hpp"

using namespace qws;

namespace {

// Test-local oracle: common-neighbor counts straight off the adjacency
// relation, with no reliance on the Graph's packed rows or neighbor lists.
int slow_common_neighbors(const Graph& g, int u, int v) {
    int c = 0;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) ++c;
    return c;
}

void check_against_slow_oracle(const Graph& g, const SrgParams& expected) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        CHECK(g.degree(u) == expected.k);
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            const int c = slow_common_neighbors(g, u, v);
            if (g.adjacent(u, v))
                CHECK(c == expected.lambda);
            else
                CHECK(c == expected.mu);
        }
    }
}

void check_symmetric_loop_free(const Graph& g) {
    int violations = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.adjacent(u, u)) ++violations;
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u)) ++violations;
    }
    CHECK(violations == 0);
}

}  // namespace

TEST_CASE("complete graphs") {
    const Graph g = build_complete(6);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 15);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 5);

    const Graph g2 = build_complete(2);
    CHECK(g2.edge_count() == 1);
    CHECK(g2.adjacent(0, 1));

    CHECK_THROWS_AS(build_complete(1), std::invalid_argument);
}

TEST_CASE("paley(5) is the 5-cycle") {
    const Graph g = build_paley(5);
    // squares mod 5 are {1, 4}, so i ~ i+-1
    for (int i = 0; i < 5; ++i) {
        CHECK(g.adjacent(i, (i + 1) % 5));
        CHECK_FALSE(g.adjacent(i, (i + 2) % 5));
    }
    const SrgCheck chk = verify_srg(g);
    REQUIRE(chk.ok);
    CHECK(chk.params == SrgParams{5, 2, 0, 1});
}

TEST_CASE("paley graphs verify with the family parameters") {
    for (const std::int64_t q : {9, 13, 17, 25}) {
        const Graph g = build_paley(q);
        const SrgCheck chk = verify_srg(g);
        REQUIRE_MESSAGE(chk.ok, chk.failure);
        CHECK(chk.params == paley_params((q - 1) / 4));
    }
    // cross-check one tuple against the identity by hand: 6*3 = 18 = 6*3
    const SrgCheck p13 = verify_srg(build_paley(13));
    CHECK(p13.params == SrgParams{13, 6, 2, 3});
    CHECK(p13.params.k * (p13.params.k - p13.params.lambda - 1) ==
          (p13.params.n - p13.params.k - 1) * p13.params.mu);
}

TEST_CASE("paley rejects inadmissible orders") {
    CHECK_THROWS_AS(build_paley(7), std::domain_error);    // 7 = 3 mod 4
    CHECK_THROWS_AS(build_paley(15), std::invalid_argument);  // not a prime power
}

TEST_CASE("latin square graphs") {
    for (const auto& [t, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {3, 3}, {4, 2}, {4, 3}, {5, 3}, {2, 2}}) {
        const Graph g = build_latin(t, d);
        const SrgCheck chk = verify_srg(g);
        REQUIRE_MESSAGE(chk.ok, chk.failure);
        CHECK(chk.params == latin_params(t, d));
    }
    CHECK_THROWS_AS(build_latin(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_latin(2, 3), std::invalid_argument);
}

TEST_CASE("triangular graphs") {
    for (const std::int64_t m : {5, 6, 7}) {
        const Graph g = build_triangular(m);
        const SrgCheck chk = verify_srg(g);
        REQUIRE_MESSAGE(chk.ok, chk.failure);
        CHECK(chk.params == triangular_params(m));
    }
    CHECK_THROWS_AS(build_triangular(4), std::invalid_argument);
}

TEST_CASE("complement of triangular(5) is the Petersen graph") {
    const Graph petersen = build_triangular(5).complement();
    const SrgCheck chk = verify_srg(petersen);
    REQUIRE_MESSAGE(chk.ok, chk.failure);
    CHECK(chk.params == SrgParams{10, 3, 0, 1});
}

TEST_CASE("complement is an involution") {
    const Graph g = build_paley(13);
    const Graph gcc = g.complement().complement();
    for (int u = 0; u < 13; ++u)
        for (int v = 0; v < 13; ++v) CHECK(g.adjacent(u, v) == gcc.adjacent(u, v));
}

TEST_CASE("verify_srg failure reports") {
    Graph path(4);  // P4
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    const SrgCheck p = verify_srg(path);
    CHECK_FALSE(p.ok);
    CHECK(p.failure.find("not regular") != std::string::npos);

    const SrgCheck complete = verify_srg(build_complete(6));
    CHECK_FALSE(complete.ok);
    CHECK(complete.failure.find("no non-adjacent pairs") != std::string::npos);

    const SrgCheck empty = verify_srg(Graph(5));
    CHECK_FALSE(empty.ok);
    CHECK(empty.failure.find("no adjacent pairs") != std::string::npos);

    const SrgCheck tiny = verify_srg(build_complete(3));
    CHECK_FALSE(tiny.ok);
    CHECK(tiny.failure.find("fewer than 4 vertices") != std::string::npos);

    // C6 is regular but not strongly regular; the first offending pair is named
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    const SrgCheck cyc = verify_srg(c6);
    CHECK_FALSE(cyc.ok);
    CHECK(cyc.failure.find("pair") != std::string::npos);
}

TEST_CASE("independent brute-force oracle agrees") {
    check_against_slow_oracle(build_paley(13), SrgParams{13, 6, 2, 3});
    check_against_slow_oracle(build_latin(3, 3), SrgParams{9, 6, 3, 6});
    check_against_slow_oracle(build_latin(4, 2), SrgParams{16, 6, 2, 2});
    check_against_slow_oracle(build_triangular(5), SrgParams{10, 6, 3, 4});
}

TEST_CASE("adjacency is symmetric and loop-free") {
    check_symmetric_loop_free(build_paley(17));
    check_symmetric_loop_free(build_latin(10, 3));
    check_symmetric_loop_free(build_triangular(8));
    check_symmetric_loop_free(build_complete(12));
    check_symmetric_loop_free(build_latin(50, 3));  // largest generated size
}

TEST_CASE("build_family dispatches to the right constructor") {
    const Graph a = build_family(GraphFamily::paley(9));
    const Graph b = build_paley(9);
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v) CHECK(a.adjacent(u, v) == b.adjacent(u, v));
    CHECK(build_family(GraphFamily::complete(5)).edge_count() == 10);
    CHECK(build_family(GraphFamily::latin_square(4, 3)).vertex_count() == 16);
    CHECK(build_family(GraphFamily::triangular(6)).vertex_count() == 15);
}

TEST_CASE("edge-list export is canonical") {
    std::ostringstream os;
    write_edge_list(build_paley(5), SrgParams{5, 2, 0, 1}, os);
    CHECK(os.str() == "5 2 0 1\n0 1\n0 4\n1 2\n2 3\n3 4\n");
}

TEST_CASE("edge bookkeeping") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // duplicate ignored
    CHECK(g.edge_count() == 1);
    CHECK(g.common_neighbors(0, 1) == 0);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    CHECK(g.common_neighbors(0, 1) == 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
}
