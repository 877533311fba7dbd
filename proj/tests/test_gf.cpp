#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "qwsearch/gf.hpp"

using namespace qws;

TEST_CASE("prime and prime-power classification") {
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));

    std::int64_t p = 0;
    int m = 0;
    CHECK(is_prime_power(9, &p, &m));
    CHECK(p == 3);
    CHECK(m == 2);
    CHECK(is_prime_power(101, &p, &m));
    CHECK(p == 101);
    CHECK(m == 1);
    CHECK(is_prime_power(1024));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(15));
    CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("field construction picks the least irreducible modulus") {
    const GaloisField f9(3, 2);
    CHECK(f9.order() == 9);
    // x^2 + 1: -1 is a non-residue mod 3, so the first candidate x^2 is
    // skipped and x^2 + 1 is the least irreducible
    CHECK(f9.modulus() == std::vector<std::int64_t>{1, 0});

    const GaloisField f5(5, 1);
    CHECK(f5.order() == 5);
    CHECK(f5.modulus() == std::vector<std::int64_t>{0});

    const GaloisField f101 = GaloisField::of_order(101);
    CHECK(f101.characteristic() == 101);
    CHECK(f101.degree() == 1);

    const GaloisField f8 = GaloisField::of_order(8);
    // x^3 + x + 1 (x^3, x^3+1 = (x+1)(x^2+x+1), x^3+x = x(x^2+1) all factor)
    CHECK(f8.modulus() == std::vector<std::int64_t>{1, 1, 0});

    CHECK_THROWS_AS(GaloisField(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField::of_order(12), std::invalid_argument);
}

TEST_CASE("arithmetic in GF(9)") {
    const GaloisField f(3, 2);
    const FieldElement x = f.element(3);  // coefficient vector (0, 1)
    CHECK(f.mul(x, x) == f.element(2));   // x^2 = -1 = 2
    CHECK(f.coeffs(f.element(5)) == std::vector<std::int64_t>{2, 1});
    CHECK(f.from_coeffs(std::vector<std::int64_t>{2, 1}) == f.element(5));
}

TEST_CASE("inverses") {
    const GaloisField f5(5, 1);
    CHECK(f5.inv(f5.element(2)) == f5.element(3));
    CHECK_THROWS_AS(f5.inv(f5.zero()), std::domain_error);

    const GaloisField f9(3, 2);
    for (std::int64_t i = 1; i < 9; ++i) {
        const FieldElement a = f9.element(i);
        CHECK(f9.mul(a, f9.inv(a)) == f9.one());
    }
}

TEST_CASE("field axioms over random triples") {
    std::mt19937 rng(20240811);
    for (const std::int64_t q : {5, 8, 9, 25, 49}) {
        const GaloisField f = GaloisField::of_order(q);
        std::uniform_int_distribution<std::int64_t> dist(0, q - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const FieldElement a = f.element(dist(rng));
            const FieldElement b = f.element(dist(rng));
            const FieldElement c = f.element(dist(rng));
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.add(a, f.neg(a)) == f.zero());
            CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        }
    }
}

TEST_CASE("frobenius endomorphism") {
    std::mt19937 rng(7);
    for (const std::int64_t q : {8, 9, 25, 27}) {
        const GaloisField f = GaloisField::of_order(q);
        const std::int64_t p = f.characteristic();
        std::uniform_int_distribution<std::int64_t> dist(0, q - 1);
        for (int trial = 0; trial < 100; ++trial) {
            const FieldElement a = f.element(dist(rng));
            const FieldElement b = f.element(dist(rng));
            CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
        }
    }
}

TEST_CASE("square structure") {
    const GaloisField f5(5, 1);
    CHECK(f5.is_nonzero_square(f5.element(4)));   // 2^2
    CHECK(f5.is_nonzero_square(f5.element(1)));
    CHECK_FALSE(f5.is_nonzero_square(f5.element(2)));
    CHECK_FALSE(f5.is_nonzero_square(f5.element(3)));
    CHECK_THROWS_AS(f5.is_nonzero_square(f5.zero()), std::domain_error);

    // exactly (q-1)/2 nonzero squares in odd characteristic
    for (const std::int64_t q : {5, 9, 13, 17, 25, 29, 101}) {
        const GaloisField f = GaloisField::of_order(q);
        CHECK(f.nonzero_square_count() == (q - 1) / 2);
    }
}

TEST_CASE("-1 is a square exactly when q = 1 mod 4") {
    for (const std::int64_t q : {5, 9, 13, 17, 25, 29, 101}) {
        const GaloisField f = GaloisField::of_order(q);
        CHECK(f.is_nonzero_square(f.neg(f.one())));
    }
    for (const std::int64_t q : {3, 7, 11, 23, 27}) {
        const GaloisField f = GaloisField::of_order(q);
        CHECK_FALSE(f.is_nonzero_square(f.neg(f.one())));
    }
}

TEST_CASE("element range checks") {
    const GaloisField f(3, 2);
    CHECK_THROWS_AS(f.element(9), std::invalid_argument);
    CHECK_THROWS_AS(f.element(-1), std::invalid_argument);
    CHECK_THROWS_AS(f.add(f.element(1), FieldElement{42}), std::invalid_argument);
}
