#include "qwsearch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qws {

SymEig jacobi_eigensolve(const std::vector<double>& a, int n) {
    if (n < 1 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("jacobi_eigensolve: matrix size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[static_cast<std::size_t>(i) * n + j] != a[static_cast<std::size_t>(j) * n + i])
                throw std::invalid_argument("jacobi_eigensolve: matrix is not symmetric");

    std::vector<double> m = a;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    const auto at = [&](std::vector<double>& mat, int r, int c) -> double& {
        return mat[static_cast<std::size_t>(r) * n + c];
    };

    double fro = 0.0;
    for (double x : m) fro += x * x;
    fro = std::sqrt(fro);
    const double tol = 1e-15 * std::max(fro, 1.0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * at(m, p, q) * at(m, p, q);
        if (std::sqrt(off) <= tol) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(m, p, q);
                if (apq == 0.0) continue;
                const double theta = (at(m, q, q) - at(m, p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double mip = at(m, i, p), miq = at(m, i, q);
                    at(m, i, p) = c * mip - s * miq;
                    at(m, i, q) = s * mip + c * miq;
                }
                for (int i = 0; i < n; ++i) {
                    const double mpi = at(m, p, i), mqi = at(m, q, i);
                    at(m, p, i) = c * mpi - s * mqi;
                    at(m, q, i) = s * mpi + c * mqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = at(v, i, p), viq = at(v, i, q);
                    at(v, i, p) = c * vip - s * viq;
                    at(v, i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return m[static_cast<std::size_t>(x) * n + x] < m[static_cast<std::size_t>(y) * n + y];
    });

    SymEig out;
    out.dim = n;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        out.values[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(src) * n + src];
        int arg = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(at(v, i, src)) > std::abs(at(v, arg, src))) arg = i;
        const double sign = at(v, arg, src) < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<std::size_t>(i) * n + j] = sign * at(v, i, src);
    }
    return out;
}

SymEig jacobi_eigensolve3(const std::array<double, 9>& a) {
    return jacobi_eigensolve(std::vector<double>(a.begin(), a.end()), 3);
}

SymEig jacobi_eigensolve2(const std::array<double, 4>& a) {
    return jacobi_eigensolve(std::vector<double>(a.begin(), a.end()), 2);
}

}  // namespace qws
