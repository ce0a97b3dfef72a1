#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "nodalgeo/operators.hpp"
#include "nodalgeo/report.hpp"

namespace nodalgeo {

/// Strong nodal domains of a vector u on the operator's graph. A vertex is a
/// node when |u(v)| <= tol_zero * ||u||_inf; the remaining vertices split
/// into maximal connected single-sign components, numbered by their smallest
/// contained vertex.
struct NodalPartition {
    std::vector<double> u;
    double tol_zero = 1e-9;
    std::vector<int> nodes;                   // sorted
    std::vector<std::vector<int>> domains;    // sorted vertex sets, ordered by min vertex
    std::vector<int> domain_sign;             // +1 / -1 per domain
    std::vector<int> domain_of;               // per vertex; -1 for nodes

    int t() const { return static_cast<int>(domains.size()); }
};

NodalPartition strong_domains(const SchrodingerOperator& op, const std::vector<double>& u,
                              double tol_zero = 1e-9);

struct MergeStep {
    int node = 0;
    int island_a = 0;  // smallest domain index of each pre-merge island, a < b
    int island_b = 0;
};

/// Regions are the connected components of the domain-adjacency graph.
/// Islands start as regions and are merged at any node adjacent to exactly
/// two islands with at least one small (single-domain) island, scanning
/// nodes in ascending order and rescanning from the start after every merge.
struct IslandSet {
    std::vector<std::vector<int>> regions;   // domain indices, ordered by min domain
    std::vector<std::vector<int>> islands;   // final partition, ordered by min domain
    std::vector<int> island_of_domain;
    std::vector<MergeStep> merge_trace;
    std::vector<int> v0;                     // nodes adjacent to >= 1 small island (final state)

    int s() const { return static_cast<int>(islands.size()); }
    bool is_small(int island) const { return islands[island].size() == 1; }
    int smalls() const;
    int larges() const { return s() - smalls(); }
};

IslandSet build_islands(const NodalPartition& np, const SchrodingerOperator& op);

/// Distinct islands reachable from node v by a single edge.
std::vector<int> islands_adjacent_to_node(const IslandSet& is, const NodalPartition& np,
                                          const Graph& g, int v);

struct AdjacencyClaim {
    bool holds = true;
    std::optional<int> offending_node;  // a V0 node adjacent to fewer than 3 islands
    int min_adjacent = 0;               // min island count over V0; 0 when V0 empty
};

/// Every node adjacent to a small island must see at least 3 islands.
/// Requires u to be an eigenfunction: throws std::invalid_argument when the
/// Rayleigh residual exceeds tol_residual * (1 + ||M||_inf) * ||u||_inf.
AdjacencyClaim claim_small_island_adjacency(const IslandSet& is, const SchrodingerOperator& op,
                                            const NodalPartition& np,
                                            double tol_residual = 1e-8);

/// The phi_v vectors live on domains, are constant across each island by
/// construction, and span W0 inside the island-constant subspace W.
struct PhiSystem {
    std::vector<int> v0;   // row order
    DenseMatrix phi;       // |V0| x t
    int s = 0;             // dim W = number of islands
    int dim_w0 = 0;        // rank of the phi rows inside W
    int y = 0;             // s - dim_w0
    std::vector<std::vector<double>> complement_basis;  // y orthonormal vectors in W, domain coords
};

PhiSystem phi_system(const IslandSet& is, const SchrodingerOperator& op, const NodalPartition& np,
                     const std::vector<double>& u);

/// dim W0 >= |S| / d, and >= (|S| - 14(2g-2)) / 6 for 3-connected graphs of
/// known genus (plus the max(0, 2g-2) variant). Ground-state inputs are
/// reported as outside the theorem regime instead of pass/fail.
std::vector<BoundReport> dim_w0_bound_check(const PhiSystem& ps, const IslandSet& is,
                                            const Graph& g, std::optional<int> genus,
                                            bool three_connected, int n_head);

/// y <= (d-1)/d * t, and <= 5t/6 + 14(2g-2)/6 for 3-connected graphs of
/// known genus (plus the clamped variant).
std::vector<BoundReport> codimension_bound_check(const PhiSystem& ps, const NodalPartition& np,
                                                 const Graph& g, std::optional<int> genus,
                                                 bool three_connected, int n_head);

nlohmann::json nodal_report_json(const NodalPartition& np, const IslandSet& is,
                                 const PhiSystem& ps);

/// Exhaustive enumeration of every legal merge order; only attempted when the
/// instance has at most `max_regions` regions. Gathers evidence on whether
/// the final island partition depends on merge order.
struct MergeOrderScan {
    bool explored = false;
    long long orders_explored = 0;
    int distinct_outcomes = 0;
    bool unique_outcome = false;
};

MergeOrderScan island_merge_order_scan(const NodalPartition& np, const SchrodingerOperator& op,
                                       int max_regions = 8);

}  // namespace nodalgeo
