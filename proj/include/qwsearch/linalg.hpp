#pragma once

#include <array>
#include <vector>

namespace qws {

/// Eigendecomposition of a small dense real symmetric matrix.
/// Deterministic output: eigenvalues ascending, eigenvector j stored as
/// column j of `vectors` (row-major n x n), and each eigenvector scaled so
/// its largest-magnitude component (first such index on ties) is positive.
struct SymEig {
    std::vector<double> values;
    std::vector<double> vectors;
    int dim = 0;

    double vec(int row, int col) const { return vectors[static_cast<std::size_t>(row) * dim + col]; }
};

/// Cyclic Jacobi rotations, iterated to machine precision. Intended for the
/// 2x2 and 3x3 reduced problems; cost grows as n^4-ish sweeps beyond that.
SymEig jacobi_eigensolve(const std::vector<double>& a, int n);

SymEig jacobi_eigensolve3(const std::array<double, 9>& a);
SymEig jacobi_eigensolve2(const std::array<double, 4>& a);

}  // namespace qws
