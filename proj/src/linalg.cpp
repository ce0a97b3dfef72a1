#include "nodalgeo/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace nodalgeo {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool DenseMatrix::is_symmetric(double tol) const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> matvec(const DenseMatrix& m, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != m.cols) throw std::invalid_argument("matvec: size mismatch");
    std::vector<double> y(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

double inf_norm(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double operator_inf_norm(const DenseMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols; ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

double frobenius_norm(const DenseMatrix& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

int rank_pivoted(DenseMatrix m, double tol) {
    const int r = m.rows, c = m.cols;
    int rank = 0;
    std::vector<bool> row_used(r, false);
    for (int step = 0; step < std::min(r, c); ++step) {
        // full pivoting: largest remaining entry, smallest indices on ties
        int pi = -1, pj = -1;
        double best = tol;
        for (int i = 0; i < r; ++i) {
            if (row_used[i]) continue;
            for (int j = 0; j < c; ++j) {
                const double v = std::abs(m(i, j));
                if (v > best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;
        row_used[pi] = true;
        ++rank;
        for (int i = 0; i < r; ++i) {
            if (row_used[i] || m(i, pj) == 0.0) continue;
            const double factor = m(i, pj) / m(pi, pj);
            for (int j = 0; j < c; ++j) m(i, j) -= factor * m(pi, j);
        }
    }
    return rank;
}

std::vector<std::vector<double>> mgs_orthonormalize(const std::vector<std::vector<double>>& rows,
                                                    double tol) {
    std::vector<std::vector<double>> basis;
    for (const auto& row : rows) {
        const double original = norm2(row);
        if (original == 0.0) continue;
        std::vector<double> v = row;
        for (const auto& b : basis) {
            const double proj = dot(v, b);
            for (size_t k = 0; k < v.size(); ++k) v[k] -= proj * b[k];
        }
        // second pass for numerical orthogonality
        for (const auto& b : basis) {
            const double proj = dot(v, b);
            for (size_t k = 0; k < v.size(); ++k) v[k] -= proj * b[k];
        }
        const double rn = norm2(v);
        if (rn <= tol * original) continue;
        for (double& x : v) x /= rn;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<double>> nullspace(const DenseMatrix& m, double tol) {
    const int r = m.rows, c = m.cols;
    DenseMatrix w = m;
    const double scale = std::max(w.max_abs(), 1.0);
    const double thresh = tol * scale;

    // row echelon with column pivoting
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int best_row = -1;
        double best = thresh;
        for (int i = row; i < r; ++i) {
            if (std::abs(w(i, col)) > best) {
                best = std::abs(w(i, col));
                best_row = i;
            }
        }
        if (best_row < 0) continue;
        if (best_row != row)
            for (int j = 0; j < c; ++j) std::swap(w(row, j), w(best_row, j));
        const double piv = w(row, col);
        for (int j = 0; j < c; ++j) w(row, j) /= piv;
        for (int i = 0; i < r; ++i) {
            if (i == row || w(i, col) == 0.0) continue;
            const double f = w(i, col);
            for (int j = 0; j < c; ++j) w(i, j) -= f * w(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(c, false);
    for (int pc : pivot_col) is_pivot[pc] = true;

    std::vector<std::vector<double>> raw;
    for (int free_col = 0; free_col < c; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<double> v(c, 0.0);
        v[free_col] = 1.0;
        for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -w(static_cast<int>(k), free_col);
        raw.push_back(std::move(v));
    }
    return mgs_orthonormalize(raw, 1e-12);
}

}  // namespace nodalgeo
