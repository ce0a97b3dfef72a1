#pragma once

#include "nodalgeo/graph.hpp"
#include "nodalgeo/linalg.hpp"

namespace nodalgeo {

/// Symmetric matrix tied to a graph: strictly negative entries exactly on
/// edges, zero on non-edges, arbitrary diagonal. The graph Laplacian is the
/// special case with -1 off-diagonals and vertex degrees on the diagonal.
class SchrodingerOperator {
public:
    static SchrodingerOperator laplacian_of(const Graph& g);

    /// Accepts the matrix iff its sign pattern matches the adjacency exactly.
    /// Throws std::invalid_argument on asymmetry, a zero or positive entry on
    /// an edge, or a nonzero entry on a non-edge.
    static SchrodingerOperator validate(const Graph& g, DenseMatrix m);

    const Graph& graph() const { return g_; }
    const DenseMatrix& matrix() const { return m_; }
    int size() const { return g_.vertex_count(); }
    double entry(int x, int y) const { return m_(x, y); }

private:
    SchrodingerOperator(Graph g, DenseMatrix m) : g_(std::move(g)), m_(std::move(m)) {}

    Graph g_;
    DenseMatrix m_;
};

}  // namespace nodalgeo
