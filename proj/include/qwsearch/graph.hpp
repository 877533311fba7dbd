#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qwsearch/gf.hpp"
#include "qwsearch/srg.hpp"

namespace qws {

/// Undirected loop-free graph on vertices 0..N-1. Adjacency is stored twice:
/// packed bit rows give O(1) pair queries and word-parallel common-neighbor
/// counts, per-vertex sorted neighbor lists give O(k) row iteration for
/// matrix-vector products. Treated as immutable once a builder returns it.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::vector<std::int32_t>& neighbors(int v) const {
        return nbrs_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(nbrs_[static_cast<std::size_t>(v)].size()); }

    /// Common degree of all vertices, or -1 if the graph is not regular.
    int uniform_degree() const;

    /// Number of vertices adjacent to both u and v.
    int common_neighbors(int u, int v) const;

    Graph complement() const;

private:
    int n_;
    int words_;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> bits_;  // n_ rows of words_ 64-bit words
    std::vector<std::vector<std::int32_t>> nbrs_;
};

Graph build_complete(std::int64_t n);

/// Paley graph: vertices are the field elements in enumeration order,
/// i ~ j iff e_i - e_j is a nonzero square. Requires q = 1 mod 4 so that
/// -1 is a square and the relation is symmetric.
Graph build_paley(const GaloisField& field);
Graph build_paley(std::int64_t q);

/// Latin square graph on the t x t cell grid, vertices in row-major order.
/// d = 2: adjacent iff same row or column (rook's graph). d = 3: same row,
/// column, or symbol of the cyclic square s(r, c) = (r + c) mod t. Larger d
/// would need mutually orthogonal squares and is not constructed.
Graph build_latin(std::int64_t t, std::int64_t d);

/// Triangular graph: vertices are the 2-element subsets of {0..m-1} in
/// lexicographic order, adjacent iff the subsets intersect.
Graph build_triangular(std::int64_t m);

Graph build_family(const GraphFamily& family);

/// Result of the brute-force strong-regularity check.
struct SrgCheck {
    bool ok = false;
    SrgParams params;     // valid only when ok
    std::string failure;  // names the first violating pair otherwise

    explicit operator bool() const { return ok; }
};

/// Counts common neighbors over every vertex pair (O(N^2 k)) and returns
/// (N, k, lambda, mu) iff the counts are constant over adjacent and over
/// non-adjacent pairs. Non-regular, edgeless, and complete inputs yield a
/// failure report, not an exception.
SrgCheck verify_srg(const Graph& g);

/// Edge-list text export: header "N k lambda mu", then one "u v" line per
/// edge, 0-indexed, u < v, sorted.
void write_edge_list(const Graph& g, const SrgParams& params, std::ostream& os);

}  // namespace qws
