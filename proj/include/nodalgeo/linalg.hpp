#pragma once

#include <vector>

namespace nodalgeo {

/// Row-major dense matrix. The whole pipeline runs at desk scale (n in the
/// hundreds at most), so there is no sparse path.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static DenseMatrix identity(int n);
    bool is_symmetric(double tol) const;
    double max_abs() const;
};

std::vector<double> matvec(const DenseMatrix& m, const std::vector<double>& x);
double dot(const std::vector<double>& x, const std::vector<double>& y);
double norm2(const std::vector<double>& x);
double inf_norm(const std::vector<double>& x);

/// Operator infinity norm (max absolute row sum).
double operator_inf_norm(const DenseMatrix& m);
double frobenius_norm(const DenseMatrix& m);

/// Rank by Gaussian elimination with full pivoting; entries whose absolute
/// value falls to `tol` or below are treated as zero.
int rank_pivoted(DenseMatrix m, double tol);

/// Orthonormal basis of { x : m x = 0 }, computed by row-echelon reduction
/// with column pivoting followed by modified Gram-Schmidt. Deterministic.
std::vector<std::vector<double>> nullspace(const DenseMatrix& m, double tol);

/// Modified Gram-Schmidt in input order. Vectors whose residual norm after
/// projection is <= tol * (their original norm) are dropped.
std::vector<std::vector<double>> mgs_orthonormalize(const std::vector<std::vector<double>>& rows,
                                                    double tol);

}  // namespace nodalgeo
