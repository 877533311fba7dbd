#include "qwsearch/srg.hpp"

#include <stdexcept>

#include "qwsearch/gf.hpp"

namespace qws {

bool check_feasibility(const SrgParams& p) {
    if (p.n <= 0 || p.k <= 0 || p.mu <= 0 || p.lambda < 0)
        throw std::invalid_argument(
            "check_feasibility: N, k, mu must be positive and lambda non-negative");
    if (p.k >= p.n - 1)
        throw std::domain_error(
            "check_feasibility: k >= N - 1 leaves no non-adjacent pairs, mu is undefined");
    return p.k * (p.k - p.lambda - 1) == (p.n - p.k - 1) * p.mu;
}

bool degree_bound_holds(const SrgParams& p) {
    return p.k * p.k > (p.n - p.k - 1) * p.mu;
}

void validate_srg_params(const SrgParams& p) {
    if (!check_feasibility(p))
        throw std::domain_error("SrgParams (" + std::to_string(p.n) + "," + std::to_string(p.k) +
                                "," + std::to_string(p.lambda) + "," + std::to_string(p.mu) +
                                ") violate the counting identity");
    if (p.lambda > p.k - 1 || p.mu > p.k)
        throw std::domain_error("SrgParams: lambda <= k - 1 and mu <= k must hold");
}

SrgParams paley_params(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("paley_params: t must be positive");
    const std::int64_t q = 4 * t + 1;
    if (!is_prime_power(q))
        throw std::invalid_argument("paley_params: 4t + 1 = " + std::to_string(q) +
                                    " is not a prime power");
    if (q % 4 != 1)
        throw std::invalid_argument("paley_params: field order must be 1 mod 4");
    const SrgParams p{q, 2 * t, t - 1, t};
    if (!check_feasibility(p)) throw std::logic_error("paley_params: infeasible tuple");
    return p;
}

SrgParams latin_params(std::int64_t t, std::int64_t d) {
    if (d < 2 || d > t)
        throw std::invalid_argument("latin_params: need 2 <= d <= t, got d=" + std::to_string(d) +
                                    " t=" + std::to_string(t));
    const std::int64_t lambda = d * d - 3 * d + t;
    if (lambda < 0) throw std::domain_error("latin_params: lambda is negative");
    const SrgParams p{t * t, d * (t - 1), lambda, d * (d - 1)};
    if (!check_feasibility(p)) throw std::logic_error("latin_params: infeasible tuple");
    return p;
}

SrgParams triangular_params(std::int64_t m) {
    if (m < 5) throw std::invalid_argument("triangular_params: m must be at least 5");
    const SrgParams p{m * (m - 1) / 2, 2 * (m - 2), m - 2, 4};
    if (!check_feasibility(p)) throw std::logic_error("triangular_params: infeasible tuple");
    return p;
}

GraphFamily GraphFamily::complete(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("complete family: need at least 2 vertices");
    GraphFamily f;
    f.tag = FamilyTag::Complete;
    f.n = n;
    return f;
}

GraphFamily GraphFamily::paley(std::int64_t q) {
    if (q < 5 || q % 4 != 1)
        throw std::invalid_argument("paley family: order must be a prime power congruent 1 mod 4");
    if (!is_prime_power(q))
        throw std::invalid_argument("paley family: " + std::to_string(q) +
                                    " is not a prime power");
    GraphFamily f;
    f.tag = FamilyTag::Paley;
    f.q = q;
    return f;
}

GraphFamily GraphFamily::latin_square(std::int64_t t, std::int64_t d) {
    latin_params(t, d);  // admissibility
    GraphFamily f;
    f.tag = FamilyTag::LatinSquare;
    f.t = t;
    f.d = d;
    return f;
}

GraphFamily GraphFamily::triangular(std::int64_t m) {
    triangular_params(m);  // admissibility
    GraphFamily f;
    f.tag = FamilyTag::Triangular;
    f.m = m;
    return f;
}

std::int64_t GraphFamily::vertex_count() const {
    switch (tag) {
        case FamilyTag::Complete: return n;
        case FamilyTag::Paley: return q;
        case FamilyTag::LatinSquare: return t * t;
        case FamilyTag::Triangular: return m * (m - 1) / 2;
    }
    return 0;
}

SrgParams GraphFamily::srg_params() const {
    switch (tag) {
        case FamilyTag::Complete:
            throw std::domain_error(
                "complete graphs have no SrgParams: mu is undefined for k = N - 1");
        case FamilyTag::Paley: return paley_params((q - 1) / 4);
        case FamilyTag::LatinSquare: return latin_params(t, d);
        case FamilyTag::Triangular: return triangular_params(m);
    }
    throw std::logic_error("GraphFamily: bad tag");
}

std::string GraphFamily::name() const {
    switch (tag) {
        case FamilyTag::Complete: return "complete(n=" + std::to_string(n) + ")";
        case FamilyTag::Paley: return "paley(q=" + std::to_string(q) + ")";
        case FamilyTag::LatinSquare:
            return "latin(t=" + std::to_string(t) + ",d=" + std::to_string(d) + ")";
        case FamilyTag::Triangular: return "triangular(m=" + std::to_string(m) + ")";
    }
    return "unknown";
}

}  // namespace qws
