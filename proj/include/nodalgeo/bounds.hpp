#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodalgeo/graph.hpp"
#include "nodalgeo/nodal.hpp"
#include "nodalgeo/report.hpp"

namespace nodalgeo {

/// t <= n + r - 1 (Davies, Gladwell, Leydold, Stadler).
BoundReport davies_check(int t, int n, int r);

/// t <= d (n - 1). Skipped for n = 1: the bound is 0 while t >= 1.
BoundReport degree_bound_check(int t, int n, int d);

/// t <= 6(n-1) + 14(2g-2), evaluated only on 3-connected graphs with known
/// genus and n >= 2. Reports the bound as stated, and next to it the variant
/// with max(0, 2g-2); for planar graphs the literal bound is negative and the
/// two readings diverge. Neither is substituted for the other.
BoundReport genus_bound_check(int t, int n, std::optional<int> genus, bool three_connected);

/// Relative discrepancy between the two sides of
///   (f, A f) = sum_i c_i^2 (w_i, A u) - 1/2 sum_{i,j} (c_i - c_j)^2 (w_i, A w_j)
/// where w_i are the domain restrictions of np's vector, u = sum w_i, and
/// f = sum c_i w_i. Valid for any symmetric A.
double duval_reiner_identity(const DenseMatrix& A, const NodalPartition& np,
                             const std::vector<double>& c);

/// r vertices whose evaluation matrix against the basis is nonsingular.
/// Greedy pivoted column selection, smallest-index tie-break; throws
/// std::invalid_argument when the basis is rank-deficient.
std::vector<int> pick_independence_set(const std::vector<std::vector<double>>& basis,
                                       double tol = 1e-9);

struct VanishingCombination {
    std::vector<double> coefficients;  // over the basis, not all zero
    std::vector<double> u;             // the combination
    int nonzero_on_r = 0;              // |u(v)| > 1e-8 * ||u||_inf among v in R
};

/// A nonzero combination of the basis vanishing on w_prime, chosen from a
/// deterministic candidate search to maximize how many R-vertices stay
/// nonzero. Requires |w_prime| = ceil(r/2) and r >= 2.
VanishingCombination vanishing_combination(const std::vector<std::vector<double>>& basis,
                                           const std::vector<int>& w_prime,
                                           const std::vector<int>& r_set);

struct MultiplicityCertificate {
    int n = 0;
    int r = 0;
    std::vector<int> independence_set;   // R
    std::vector<int> w_prime;            // connected, |W'| = ceil(r/2)
    std::vector<double> coefficients;    // a_i with u = sum a_i f_i
    std::vector<double> u;
    int nonzero_on_r = 0;
    std::vector<int> w_component;        // node component containing W'
    std::vector<int> z;                  // inner vertex boundary of the component
};

/// Flood-fills the node component of u containing w_prime and extracts its
/// inner boundary. Every w_prime vertex must be a node of u at tol_zero.
void node_component_and_z(MultiplicityCertificate& cert, const std::vector<double>& u,
                          const std::vector<int>& w_prime, const Graph& g, double tol_zero);

/// |Z| >= sqrt(r/2) - 1, meaningful only under the volume-growth condition.
BoundReport inner_boundary_check(const MultiplicityCertificate& cert, VGStatus vg);

/// r <= 2 [6(n-1) + 15(2g-2)]^2 on 3-connected graphs with the volume-growth
/// condition and known genus, plus the max(0, 2g-2) variant.
BoundReport multiplicity_bound_check(int r, int n, std::optional<int> genus,
                                     bool three_connected, VGStatus vg);

/// Connected vertex sets of the requested size, one grown greedily from each
/// start vertex (BFS order). Deduplicated, deterministic.
std::vector<std::vector<int>> connected_vertex_sets(const Graph& g, int size);

}  // namespace nodalgeo
