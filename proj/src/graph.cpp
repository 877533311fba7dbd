#include "qwsearch/graph.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace qws {

namespace {

constexpr int kMaxVertices = 1 << 16;

void require_vertex_count(std::int64_t n, const char* who) {
    if (n < 2 || n > kMaxVertices)
        throw std::invalid_argument(std::string(who) + ": vertex count " + std::to_string(n) +
                                    " out of supported range");
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    require_vertex_count(n, "Graph");
    bits_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_), 0);
    nbrs_.resize(static_cast<std::size_t>(n_));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("Graph::add_edge: bad endpoints");
    if (adjacent(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v / 64)] |=
        std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u / 64)] |=
        std::uint64_t{1} << (u % 64);
    nbrs_[static_cast<std::size_t>(u)].push_back(static_cast<std::int32_t>(v));
    nbrs_[static_cast<std::size_t>(v)].push_back(static_cast<std::int32_t>(u));
    ++edges_;
}

bool Graph::adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v / 64)] >>
            (v % 64)) &
           1;
}

int Graph::uniform_degree() const {
    const int k = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != k) return -1;
    return k;
}

int Graph::common_neighbors(int u, int v) const {
    const std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * words_;
    const std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * words_;
    int count = 0;
    for (int w = 0; w < words_; ++w) count += std::popcount(ru[w] & rv[w]);
    return count;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph build_complete(std::int64_t n) {
    require_vertex_count(n, "build_complete");
    Graph g(static_cast<int>(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph build_paley(const GaloisField& field) {
    const std::int64_t q = field.order();
    if (q % 4 != 1)
        throw std::domain_error(
            "build_paley: field order must be 1 mod 4 or the relation is not symmetric");
    require_vertex_count(q, "build_paley");
    Graph g(static_cast<int>(q));
    for (std::int64_t i = 0; i < q; ++i) {
        for (std::int64_t j = i + 1; j < q; ++j) {
            const FieldElement diff = field.sub(field.element(i), field.element(j));
            if (field.is_nonzero_square(diff))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

Graph build_paley(std::int64_t q) { return build_paley(GaloisField::of_order(q)); }

Graph build_latin(std::int64_t t, std::int64_t d) {
    if (d != 2 && d != 3)
        throw std::invalid_argument("build_latin: only d = 2 and d = 3 are constructed");
    if (t < d) throw std::invalid_argument("build_latin: need t >= d");
    require_vertex_count(t * t, "build_latin");
    const auto row = [t](std::int64_t v) { return v / t; };
    const auto col = [t](std::int64_t v) { return v % t; };
    const auto sym = [t](std::int64_t v) { return (v / t + v % t) % t; };
    const std::int64_t n = t * t;
    Graph g(static_cast<int>(n));
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = u + 1; v < n; ++v) {
            bool adj = row(u) == row(v) || col(u) == col(v);
            if (d == 3) adj = adj || sym(u) == sym(v);
            if (adj) g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return g;
}

Graph build_triangular(std::int64_t m) {
    if (m < 5) throw std::invalid_argument("build_triangular: m must be at least 5");
    const std::int64_t n = m * (m - 1) / 2;
    require_vertex_count(n, "build_triangular");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    Graph g(static_cast<int>(n));
    for (std::size_t u = 0; u < pairs.size(); ++u) {
        for (std::size_t v = u + 1; v < pairs.size(); ++v) {
            const auto [a, b] = pairs[u];
            const auto [c, dd] = pairs[v];
            if (a == c || a == dd || b == c || b == dd)
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return g;
}

Graph build_family(const GraphFamily& family) {
    switch (family.tag) {
        case FamilyTag::Complete: return build_complete(family.n);
        case FamilyTag::Paley: return build_paley(family.q);
        case FamilyTag::LatinSquare: return build_latin(family.t, family.d);
        case FamilyTag::Triangular: return build_triangular(family.m);
    }
    throw std::logic_error("build_family: bad tag");
}

SrgCheck verify_srg(const Graph& g) {
    SrgCheck r;
    const int n = g.vertex_count();
    if (n < 4) {
        r.failure = "fewer than 4 vertices";
        return r;
    }
    const int k = g.uniform_degree();
    if (k < 0) {
        int v = 1;
        while (v < n && g.degree(v) == g.degree(0)) ++v;
        r.failure = "not regular: vertex 0 has degree " + std::to_string(g.degree(0)) +
                    ", vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
        return r;
    }
    if (k == n - 1) {
        r.failure = "no non-adjacent pairs: mu is undefined (complete graph)";
        return r;
    }
    if (k == 0) {
        r.failure = "no adjacent pairs: lambda is undefined (edgeless graph)";
        return r;
    }

    std::int64_t lambda = -1, mu = -1;
    int lu = -1, lv = -1, mu_u = -1, mu_v = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int c = g.common_neighbors(u, v);
            if (g.adjacent(u, v)) {
                if (lambda < 0) {
                    lambda = c;
                    lu = u;
                    lv = v;
                } else if (c != lambda) {
                    r.failure = "adjacent pair (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has " + std::to_string(c) + " common neighbors but pair (" +
                                std::to_string(lu) + "," + std::to_string(lv) + ") has " +
                                std::to_string(lambda);
                    return r;
                }
            } else {
                if (mu < 0) {
                    mu = c;
                    mu_u = u;
                    mu_v = v;
                } else if (c != mu) {
                    r.failure = "non-adjacent pair (" + std::to_string(u) + "," +
                                std::to_string(v) + ") has " + std::to_string(c) +
                                " common neighbors but pair (" + std::to_string(mu_u) + "," +
                                std::to_string(mu_v) + ") has " + std::to_string(mu);
                    return r;
                }
            }
        }
    }
    if (mu <= 0) {
        // disconnected union of cliques: mu = 0 is not a search-relevant graph
        r.failure = "non-adjacent pairs share no common neighbors (mu = 0)";
        return r;
    }
    r.ok = true;
    r.params = SrgParams{n, k, lambda, mu};
    return r;
}

void write_edge_list(const Graph& g, const SrgParams& params, std::ostream& os) {
    os << params.n << ' ' << params.k << ' ' << params.lambda << ' ' << params.mu << '\n';
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) os << u << ' ' << v << '\n';
}

}  // namespace qws
