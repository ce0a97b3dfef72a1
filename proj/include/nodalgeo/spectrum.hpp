#pragma once

#include <vector>

#include "nodalgeo/operators.hpp"

namespace nodalgeo {

struct MultiplicityGroup {
    int head = 0;   // 0-based index of the first eigenvalue in the group
    int size = 0;   // multiplicity
    double lambda = 0.0;
};

/// Full symmetric eigendecomposition with multiplicity clustering.
/// Eigenvalues ascend; eigenvectors are orthonormal columns; groups split
/// wherever the gap between consecutive eigenvalues exceeds
/// tol_eig * max(1, |lambda_max|).
class Spectrum {
public:
    Spectrum(SchrodingerOperator op, std::vector<double> eigenvalues, DenseMatrix vectors,
             double tol_eig);

    const SchrodingerOperator& op() const { return op_; }
    const std::vector<double>& eigenvalues() const { return values_; }
    const std::vector<MultiplicityGroup>& groups() const { return groups_; }
    double tol_eig() const { return tol_eig_; }
    double scale() const { return scale_; }
    int size() const { return static_cast<int>(values_.size()); }

    std::vector<double> eigenvector(int i) const;  // 0-based

    /// Max over all pairs of || M u - lambda u ||_inf.
    double max_residual() const;
    /// Max off-unit deviation: |<u_i,u_j> - delta_ij|.
    double max_orthonormality_defect() const;

private:
    SchrodingerOperator op_;
    std::vector<double> values_;
    DenseMatrix vectors_;  // columns are eigenvectors
    std::vector<MultiplicityGroup> groups_;
    double tol_eig_;
    double scale_;
};

/// Cyclic Jacobi rotations; converges when the off-diagonal Frobenius norm
/// drops to 1e-12 * ||M||_F, capped at 100 sweeps (throws std::runtime_error
/// beyond the cap). Deterministic sweep order; eigenvector sign convention:
/// first coordinate of significant magnitude made positive; degenerate
/// eigenspaces re-orthonormalized by modified Gram-Schmidt in index order.
Spectrum eigendecompose(const SchrodingerOperator& op, double tol_eig = 1e-8);

struct EigenQuery {
    int n = 0;             // 1-based index of the group head
    double lambda = 0.0;
    int multiplicity = 0;
    std::vector<std::vector<double>> basis;  // orthonormal eigenspace basis
};

/// `n` is 1-based and must be the first index of a multiplicity group;
/// otherwise throws std::invalid_argument naming the group head.
EigenQuery eigenquery(const Spectrum& spec, int n);

/// Returns the 1-based head of the group containing 1-based index n.
int group_head_of(const Spectrum& spec, int n);

/// True iff the lowest eigenvalue group has size 1 and its eigenvector can be
/// signed strictly positive everywhere. Requires the operator's graph to be
/// connected.
bool perron_check(const Spectrum& spec, double tol_zero = 1e-9);

}  // namespace nodalgeo
