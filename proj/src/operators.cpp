#include "nodalgeo/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nodalgeo {

SchrodingerOperator SchrodingerOperator::laplacian_of(const Graph& g) {
    const int n = g.vertex_count();
    DenseMatrix m(n, n);
    for (int v = 0; v < n; ++v) m(v, v) = g.degree(v);
    for (auto [u, v] : g.edges()) {
        m(u, v) = -1.0;
        m(v, u) = -1.0;
    }
    return SchrodingerOperator(g, std::move(m));
}

SchrodingerOperator SchrodingerOperator::validate(const Graph& g, DenseMatrix m) {
    const int n = g.vertex_count();
    if (m.rows != n || m.cols != n)
        throw std::invalid_argument("operator matrix dimensions do not match the graph");
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (m(x, y) != m(y, x))
                throw std::invalid_argument("operator matrix is not symmetric at (" +
                                            std::to_string(x) + "," + std::to_string(y) + ")");
            const bool edge = g.adjacent(x, y);
            if (edge && !(m(x, y) < 0.0))
                throw std::invalid_argument("entry on edge (" + std::to_string(x) + "," +
                                            std::to_string(y) + ") must be strictly negative");
            if (!edge && m(x, y) != 0.0)
                throw std::invalid_argument("nonzero entry on non-edge (" + std::to_string(x) +
                                            "," + std::to_string(y) + ")");
        }
    return SchrodingerOperator(g, std::move(m));
}

}  // namespace nodalgeo
