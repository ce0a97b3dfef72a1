#include "nodalgeo/families.hpp"

#include <stdexcept>

#include "nodalgeo/rng.hpp"

namespace nodalgeo {

namespace {

void require_positive(int value, const char* what) {
    if (value <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

Graph star(int leaves) {
    require_positive(leaves, "star leaf count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

Graph double_star(int leaves) { return complete_bipartite(2, leaves); }

Graph complete_bipartite(int a, int b) {
    require_positive(a, "part size");
    require_positive(b, "part size");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path(int n) {
    require_positive(n, "path length");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph grid(int rows, int cols) {
    require_positive(rows, "grid rows");
    require_positive(cols, "grid cols");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, edges);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    require_positive(n, "vertex count");
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in (0, 1]");
    Rng rng(seed);
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_double() < p) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("random_connected: no connected sample found (p too small?)");
}

}  // namespace nodalgeo
