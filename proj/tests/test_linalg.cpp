#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "qwsearch/linalg.hpp"

using namespace qws;

namespace {

void check_decomposition(const std::vector<double>& a, const SymEig& e, int n, double tol) {
    // ascending eigenvalues
    for (int j = 0; j + 1 < n; ++j) CHECK(e.values[j] <= e.values[j + 1]);
    // orthonormal columns
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double dot = 0.0;
            for (int r = 0; r < n; ++r) dot += e.vec(r, i) * e.vec(r, j);
            CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= tol);
        }
    }
    // A v = lambda v
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n; ++r) {
            double av = 0.0;
            for (int c = 0; c < n; ++c) av += a[r * n + c] * e.vec(c, j);
            CHECK(std::abs(av - e.values[j] * e.vec(r, j)) <= tol);
        }
    }
}

}  // namespace

TEST_CASE("2x2 with known spectrum") {
    const std::vector<double> a = {2.0, 1.0, 1.0, 2.0};
    const SymEig e = jacobi_eigensolve(a, 2);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));
    check_decomposition(a, e, 2, 1e-14);
}

TEST_CASE("diagonal input is sorted, not mangled") {
    const std::vector<double> a = {3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0};
    const SymEig e = jacobi_eigensolve(a, 3);
    CHECK(e.values == std::vector<double>{1.0, 2.0, 3.0});
    check_decomposition(a, e, 3, 1e-15);
}

TEST_CASE("random symmetric matrices decompose to machine precision") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int n : {2, 3, 4, 6}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<double> a(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = dist(rng);
            check_decomposition(a, jacobi_eigensolve(a, n), n, 1e-12);
        }
    }
}

TEST_CASE("deterministic output and sign convention") {
    const std::vector<double> a = {1.0, 0.5, 0.25, 0.5, -1.0, 0.75, 0.25, 0.75, 0.5};
    const SymEig e1 = jacobi_eigensolve(a, 3);
    const SymEig e2 = jacobi_eigensolve(a, 3);
    CHECK(e1.values == e2.values);
    CHECK(e1.vectors == e2.vectors);
    for (int j = 0; j < 3; ++j) {
        int arg = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(e1.vec(i, j)) > std::abs(e1.vec(arg, j))) arg = i;
        CHECK(e1.vec(arg, j) > 0.0);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(jacobi_eigensolve({1.0, 2.0, 3.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_eigensolve({1.0, 2.0, 3.0, 4.0}, 2), std::invalid_argument);
    const SymEig one = jacobi_eigensolve({7.0}, 1);
    CHECK(one.values[0] == 7.0);
    CHECK(one.vec(0, 0) == 1.0);
}

TEST_CASE("array helpers") {
    const SymEig e3 = jacobi_eigensolve3({1, 0, 0, 0, 2, 0, 0, 0, 3});
    CHECK(e3.values == std::vector<double>{1.0, 2.0, 3.0});
    const SymEig e2 = jacobi_eigensolve2({0.0, 1.0, 1.0, 0.0});
    CHECK(e2.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(e2.values[1] == doctest::Approx(1.0).epsilon(1e-15));
}
