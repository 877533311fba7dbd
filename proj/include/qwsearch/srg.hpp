#pragma once

#include <cstdint>
#include <string>

namespace qws {

/// Strongly-regular-graph parameter tuple (N, k, lambda, mu): N vertices of
/// degree k, adjacent pairs share lambda common neighbors, non-adjacent
/// pairs share mu.
struct SrgParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Exact integer test of the counting identity
/// k(k - lambda - 1) = (N - k - 1) mu.
/// Throws std::domain_error when k >= N - 1: mu is undefined there because
/// no non-adjacent pair exists, so neither true nor false would be honest.
/// Throws std::invalid_argument for nonpositive N, k, mu or negative lambda.
bool check_feasibility(const SrgParams& p);

/// k^2 > (N - k - 1) mu in exact integer arithmetic; the finite-size form
/// of the degree lower bound k = Omega(sqrt(N)).
bool degree_bound_holds(const SrgParams& p);

/// Throws unless p satisfies every SrgParams invariant: positivity,
/// k < N - 1, lambda <= k - 1, mu <= k, and the counting identity.
void validate_srg_params(const SrgParams& p);

/// (4t+1, 2t, t-1, t); requires 4t+1 to be a prime power.
SrgParams paley_params(std::int64_t t);

/// (t^2, d(t-1), d^2 - 3d + t, d(d-1)); requires 2 <= d <= t.
SrgParams latin_params(std::int64_t t, std::int64_t d);

/// (m(m-1)/2, 2(m-2), m-2, 4); requires m >= 5.
SrgParams triangular_params(std::int64_t m);

enum class FamilyTag { Complete, Paley, LatinSquare, Triangular };

/// A graph family instance. The complete graph carries its own tag rather
/// than an SrgParams value: with k = N - 1 there are no non-adjacent pairs
/// and mu is undefined.
struct GraphFamily {
    FamilyTag tag = FamilyTag::Complete;
    std::int64_t n = 0;  // Complete: vertex count
    std::int64_t q = 0;  // Paley: field order
    std::int64_t t = 0;  // LatinSquare: side length
    std::int64_t d = 0;  // LatinSquare: classes per vertex (rows/columns/symbols)
    std::int64_t m = 0;  // Triangular: base set size

    static GraphFamily complete(std::int64_t n);
    static GraphFamily paley(std::int64_t q);
    static GraphFamily latin_square(std::int64_t t, std::int64_t d);
    static GraphFamily triangular(std::int64_t m);

    bool is_srg() const { return tag != FamilyTag::Complete; }
    std::int64_t vertex_count() const;

    /// Family-predicted parameters; throws std::domain_error for Complete.
    SrgParams srg_params() const;

    std::string name() const;  // e.g. "paley(q=101)"
};

}  // namespace qws
