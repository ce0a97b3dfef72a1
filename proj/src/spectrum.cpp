#include "nodalgeo/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nodalgeo {

namespace {

double offdiag_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.rows; ++p)
        for (int q = p + 1; q < a.cols; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
}

}  // namespace

Spectrum::Spectrum(SchrodingerOperator op, std::vector<double> eigenvalues, DenseMatrix vectors,
                   double tol_eig)
    : op_(std::move(op)), values_(std::move(eigenvalues)), vectors_(std::move(vectors)),
      tol_eig_(tol_eig) {
    const int n = static_cast<int>(values_.size());
    scale_ = std::max(1.0, n ? std::abs(values_.back()) : 1.0);
    int head = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || values_[i] - values_[i - 1] > tol_eig_ * scale_) {
            groups_.push_back({head, i - head, values_[head]});
            head = i;
        }
    }
}

std::vector<double> Spectrum::eigenvector(int i) const {
    std::vector<double> v(vectors_.rows);
    for (int r = 0; r < vectors_.rows; ++r) v[r] = vectors_(r, i);
    return v;
}

double Spectrum::max_residual() const {
    double worst = 0.0;
    for (int i = 0; i < size(); ++i) {
        const auto u = eigenvector(i);
        const auto mu = matvec(op_.matrix(), u);
        for (int r = 0; r < vectors_.rows; ++r)
            worst = std::max(worst, std::abs(mu[r] - values_[i] * u[r]));
    }
    return worst;
}

double Spectrum::max_orthonormality_defect() const {
    double worst = 0.0;
    for (int i = 0; i < size(); ++i) {
        const auto ui = eigenvector(i);
        for (int j = i; j < size(); ++j) {
            const double d = dot(ui, eigenvector(j));
            worst = std::max(worst, std::abs(d - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

Spectrum eigendecompose(const SchrodingerOperator& op, double tol_eig) {
    const int n = op.size();
    DenseMatrix a = op.matrix();
    DenseMatrix v = DenseMatrix::identity(n);
    const double target = 1e-12 * frobenius_norm(op.matrix());

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(a) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps && offdiag_norm(a) > target)
        throw std::runtime_error("eigendecompose: Jacobi sweeps did not converge");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });

    std::vector<double> values(n);
    DenseMatrix sorted(n, n);
    for (int i = 0; i < n; ++i) {
        values[i] = a(perm[i], perm[i]);
        for (int r = 0; r < n; ++r) sorted(r, i) = v(r, perm[i]);
    }

    // multiplicity groups by gap threshold, mirrored by the Spectrum ctor
    const double scale = std::max(1.0, n ? std::abs(values.back()) : 1.0);
    std::vector<std::pair<int, int>> groups;  // (head, size)
    int head = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || values[i] - values[i - 1] > tol_eig * scale) {
            groups.emplace_back(head, i - head);
            head = i;
        }
    }

    auto column = [&](int i) {
        std::vector<double> col(n);
        for (int r = 0; r < n; ++r) col[r] = sorted(r, i);
        return col;
    };
    auto store = [&](int i, const std::vector<double>& col) {
        for (int r = 0; r < n; ++r) sorted(r, i) = col[r];
    };

    // degenerate eigenspaces: modified Gram-Schmidt in index order, then a
    // sign convention (first significant coordinate positive) per vector
    for (auto [ghead, gsize] : groups) {
        if (gsize > 1) {
            std::vector<std::vector<double>> cols;
            for (int i = ghead; i < ghead + gsize; ++i) cols.push_back(column(i));
            const auto ortho = mgs_orthonormalize(cols, 1e-12);
            if (static_cast<int>(ortho.size()) != gsize)
                throw std::runtime_error("eigendecompose: degenerate eigenspace collapsed");
            for (int i = 0; i < gsize; ++i) store(ghead + i, ortho[i]);
        }
        for (int i = ghead; i < ghead + gsize; ++i) {
            auto col = column(i);
            const double m = inf_norm(col);
            for (double x : col) {
                if (std::abs(x) > 1e-12 * m) {
                    if (x < 0.0)
                        for (double& y : col) y = -y;
                    break;
                }
            }
            store(i, col);
        }
    }

    return Spectrum(op, std::move(values), std::move(sorted), tol_eig);
}

EigenQuery eigenquery(const Spectrum& spec, int n) {
    if (n < 1 || n > spec.size()) throw std::invalid_argument("eigenvalue index out of range");
    for (const auto& grp : spec.groups()) {
        if (grp.head + 1 == n) {
            EigenQuery q;
            q.n = n;
            q.lambda = grp.lambda;
            q.multiplicity = grp.size;
            for (int i = grp.head; i < grp.head + grp.size; ++i)
                q.basis.push_back(spec.eigenvector(i));
            return q;
        }
        if (grp.head + 1 > n) break;
    }
    throw std::invalid_argument("index " + std::to_string(n) +
                                " lies inside a multiplicity group; use its head n=" +
                                std::to_string(group_head_of(spec, n)));
}

int group_head_of(const Spectrum& spec, int n) {
    if (n < 1 || n > spec.size()) throw std::invalid_argument("eigenvalue index out of range");
    for (const auto& grp : spec.groups())
        if (grp.head + 1 <= n && n <= grp.head + grp.size) return grp.head + 1;
    return 1;
}

bool perron_check(const Spectrum& spec, double tol_zero) {
    spec.op().graph().require_connected("perron_check");
    const auto& groups = spec.groups();
    if (groups.empty() || groups.front().size != 1) return false;
    const auto u = spec.eigenvector(0);
    const double scale = inf_norm(u);
    int sign = 0;
    for (double x : u) {
        if (std::abs(x) <= tol_zero * scale) return false;  // a zero: not strictly signed
        const int s = x > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return true;
}

}  // namespace nodalgeo
