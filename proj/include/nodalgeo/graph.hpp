#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nodalgeo {

/// Simple undirected graph on dense 0-indexed vertices. No self-loops,
/// no multi-edges; adjacency lists are kept sorted so iteration order is
/// deterministic everywhere downstream.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;
    bool adjacent(int u, int v) const;
    bool is_connected() const { return connected_; }
    bool is_complete() const;

    /// Throws std::invalid_argument when the graph is disconnected.
    /// Called by every operation whose contract needs connectivity.
    void require_connected(const char* op) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // sorted, u < v
    std::vector<std::vector<int>> adj_;
    bool connected_ = true;
};

Graph from_edge_list(const std::vector<std::pair<int, int>>& pairs, int n);

/// True iff no set of fewer than k vertices disconnects g.
/// Complete graphs: true iff n > k.
bool vertex_connectivity_at_least(const Graph& g, int k);

/// Outer vertex boundary: vertices outside `d` adjacent to some vertex of `d`.
std::vector<int> vertex_boundary(const Graph& g, const std::vector<int>& d);

/// Cyclic neighbor order at each vertex; fixes an embedding into an
/// orientable surface.
struct RotationSystem {
    std::vector<std::vector<int>> order;  // order[v] = neighbors of v in cyclic order

    bool operator==(const RotationSystem& other) const { return order == other.order; }
};

/// Throws std::invalid_argument unless every rotation is a permutation of
/// exactly that vertex's neighbor set.
void validate_rotation(const Graph& g, const RotationSystem& rot);

struct SurfaceStats {
    int v = 0;
    int e = 0;
    int f = 0;
    int genus = 0;
};

/// Face-tracing convention: from directed edge (u,v) the walk continues on
/// (v,w) where w is the successor of u in v's cyclic rotation. Genus comes
/// out of Euler's formula v - e + f = 2 - 2*genus.
SurfaceStats trace_faces(const Graph& g, const RotationSystem& rot);

struct GenusSearch {
    std::optional<int> genus;  // empty <=> enumeration did not fit the budget
    long long enumerated = 0;
    std::optional<RotationSystem> witness;  // a rotation system attaining the minimum

    bool exceeded() const { return !genus.has_value(); }
};

/// Exhaustive minimum over all rotation systems. The enumeration has size
/// prod_v (deg(v)-1)!; when that exceeds `budget` the search is not run and
/// the result reports "exceeded" instead of hanging.
GenusSearch minimal_genus(const Graph& g, long long budget = 5'000'000);

enum class VGStatus { satisfied, violated, not_falsified };

struct VGReport {
    VGStatus status = VGStatus::not_falsified;
    std::optional<std::vector<int>> witness;  // D with |D| <= n/2 and |boundary(D)| < sqrt(|D|)
    long long subsets_checked = 0;
    bool exhaustive = false;
};

/// Quadratic volume growth: |boundary(D)| >= sqrt(|D|) for every D with
/// |D| <= n/2. Exhaustive up to `max_exhaustive_n` vertices; beyond that a
/// seeded random + greedy search runs under `budget` and can only answer
/// "violated" or "not falsified".
VGReport vg_check(const Graph& g, int max_exhaustive_n = 20, long long budget = 100'000,
                  std::uint64_t seed = 42);

const char* to_string(VGStatus s);

}  // namespace nodalgeo
