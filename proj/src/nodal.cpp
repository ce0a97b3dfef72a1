#include "nodalgeo/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace nodalgeo {

namespace {

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

constexpr const char* kOutsideRegime = "outside theorem regime (n = 1)";

}  // namespace

NodalPartition strong_domains(const SchrodingerOperator& op, const std::vector<double>& u,
                              double tol_zero) {
    const Graph& g = op.graph();
    const int n = g.vertex_count();
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("strong_domains: vector length does not match the graph");
    const double scale = inf_norm(u);
    if (scale == 0.0) throw std::invalid_argument("strong_domains: the zero vector has no domains");

    NodalPartition np;
    np.u = u;
    np.tol_zero = tol_zero;
    np.domain_of.assign(n, -1);

    std::vector<int> sign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (std::abs(u[v]) <= tol_zero * scale)
            np.nodes.push_back(v);
        else
            sign[v] = sign_of(u[v]);
    }

    // flood fill over same-sign non-node vertices, in ascending start order so
    // domains come out numbered by their smallest contained vertex
    for (int start = 0; start < n; ++start) {
        if (sign[start] == 0 || np.domain_of[start] >= 0) continue;
        const int id = np.t();
        std::vector<int> members;
        std::queue<int> q;
        q.push(start);
        np.domain_of[start] = id;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            members.push_back(v);
            for (int w : g.neighbors(v)) {
                if (sign[w] == sign[start] && np.domain_of[w] < 0) {
                    np.domain_of[w] = id;
                    q.push(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        np.domains.push_back(std::move(members));
        np.domain_sign.push_back(sign[start]);
    }
    return np;
}

int IslandSet::smalls() const {
    int c = 0;
    for (const auto& island : islands)
        if (island.size() == 1) ++c;
    return c;
}

std::vector<int> islands_adjacent_to_node(const IslandSet& is, const NodalPartition& np,
                                          const Graph& g, int v) {
    std::set<int> ids;
    for (int w : g.neighbors(v)) {
        const int dom = np.domain_of[w];
        if (dom >= 0) ids.insert(is.island_of_domain[dom]);
    }
    return {ids.begin(), ids.end()};
}

IslandSet build_islands(const NodalPartition& np, const SchrodingerOperator& op) {
    const Graph& g = op.graph();
    const int t = np.t();

    // regions: connected components of the domain-adjacency graph
    std::vector<int> parent(t);
    for (int i = 0; i < t; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges()) {
        const int da = np.domain_of[a], db = np.domain_of[b];
        if (da >= 0 && db >= 0 && da != db) parent[find(da)] = find(db);
    }

    IslandSet is;
    std::map<int, std::vector<int>> by_root;
    for (int d = 0; d < t; ++d) by_root[find(d)].push_back(d);
    for (auto& [root, doms] : by_root) {
        std::sort(doms.begin(), doms.end());
        is.regions.push_back(doms);
    }
    std::sort(is.regions.begin(), is.regions.end());

    // islands start as regions; merge at the first node (ascending) adjacent
    // to exactly two islands with at least one small, then rescan
    std::vector<std::vector<int>> islands = is.regions;
    std::vector<int> island_of(t);
    auto reindex = [&]() {
        for (size_t i = 0; i < islands.size(); ++i)
            for (int d : islands[i]) island_of[d] = static_cast<int>(i);
    };
    reindex();

    auto adjacent_islands = [&](int v) {
        std::set<int> ids;
        for (int w : g.neighbors(v)) {
            const int dom = np.domain_of[w];
            if (dom >= 0) ids.insert(island_of[dom]);
        }
        return ids;
    };

    while (true) {
        bool merged = false;
        for (int v : np.nodes) {
            const auto ids = adjacent_islands(v);
            if (ids.size() != 2) continue;
            const int ia = *ids.begin();
            const int ib = *std::next(ids.begin());
            if (islands[ia].size() != 1 && islands[ib].size() != 1) continue;
            is.merge_trace.push_back({v, islands[ia].front(), islands[ib].front()});
            auto absorbed = std::move(islands[ib]);
            islands.erase(islands.begin() + ib);
            auto& into = islands[ia];
            into.insert(into.end(), absorbed.begin(), absorbed.end());
            std::sort(into.begin(), into.end());
            std::sort(islands.begin(), islands.end());
            reindex();
            merged = true;
            break;
        }
        if (!merged) break;
    }

    is.islands = std::move(islands);
    is.island_of_domain = std::move(island_of);

    // V0: nodes adjacent to at least one small island, in the final state
    for (int v : np.nodes) {
        bool near_small = false;
        for (int w : g.neighbors(v)) {
            const int dom = np.domain_of[w];
            if (dom >= 0 && is.islands[is.island_of_domain[dom]].size() == 1) {
                near_small = true;
                break;
            }
        }
        if (near_small) is.v0.push_back(v);
    }
    return is;
}

AdjacencyClaim claim_small_island_adjacency(const IslandSet& is, const SchrodingerOperator& op,
                                            const NodalPartition& np, double tol_residual) {
    // the claim is a theorem only for eigenfunctions, so insist on one
    const auto& u = np.u;
    const double uu = dot(u, u);
    if (uu == 0.0) throw std::invalid_argument("claim requires a nonzero eigenfunction");
    const auto mu = matvec(op.matrix(), u);
    const double lambda = dot(u, mu) / uu;
    double residual = 0.0;
    for (size_t i = 0; i < u.size(); ++i)
        residual = std::max(residual, std::abs(mu[i] - lambda * u[i]));
    const double allowed =
        tol_residual * (1.0 + operator_inf_norm(op.matrix())) * inf_norm(u);
    if (residual > allowed)
        throw std::invalid_argument("claim requires an eigenfunction (residual " +
                                    std::to_string(residual) + " exceeds tolerance)");

    AdjacencyClaim result;
    result.min_adjacent = 0;
    bool first = true;
    for (int v : is.v0) {
        const int count = static_cast<int>(islands_adjacent_to_node(is, np, op.graph(), v).size());
        if (first || count < result.min_adjacent) result.min_adjacent = count;
        first = false;
        if (count < 3 && !result.offending_node) {
            result.holds = false;
            result.offending_node = v;
        }
    }
    return result;
}

PhiSystem phi_system(const IslandSet& is, const SchrodingerOperator& op, const NodalPartition& np,
                     const std::vector<double>& u) {
    const Graph& g = op.graph();
    const int t = np.t();
    const int s = is.s();

    PhiSystem ps;
    ps.v0 = is.v0;
    ps.s = s;
    ps.phi = DenseMatrix(static_cast<int>(is.v0.size()), t);

    // phi_v per island: operator-weighted mass of u over the island, averaged
    // by the island's domain count, then broadcast to the island's domains
    std::vector<double> island_value(s);
    for (size_t row = 0; row < is.v0.size(); ++row) {
        const int v = is.v0[row];
        std::fill(island_value.begin(), island_value.end(), 0.0);
        for (int w : g.neighbors(v)) {
            const int dom = np.domain_of[w];
            if (dom >= 0) island_value[is.island_of_domain[dom]] += op.entry(v, w) * u[w];
        }
        for (int d = 0; d < t; ++d) {
            const int isl = is.island_of_domain[d];
            ps.phi(static_cast<int>(row), d) =
                island_value[isl] / static_cast<double>(is.islands[isl].size());
        }
    }

    // rank inside W via pivoted orthogonal elimination in isometric island
    // coordinates (f constant a_I on island I maps to a_I * sqrt(t(I)))
    std::vector<std::vector<double>> rows_iso;
    for (size_t row = 0; row < is.v0.size(); ++row) {
        std::vector<double> r(s, 0.0);
        for (int isl = 0; isl < s; ++isl) {
            const int d0 = is.islands[isl].front();
            r[isl] = ps.phi(static_cast<int>(row), d0) *
                     std::sqrt(static_cast<double>(is.islands[isl].size()));
        }
        rows_iso.push_back(std::move(r));
    }

    // pivoted modified Gram-Schmidt: always take the largest remaining
    // residual next, stop below the relative threshold
    std::vector<std::vector<double>> basis;
    {
        auto remaining = rows_iso;
        double max_norm = 0.0;
        for (const auto& r : remaining) max_norm = std::max(max_norm, norm2(r));
        const double accept = 1e-9 * std::max(max_norm, 1e-300);
        std::vector<bool> used(remaining.size(), false);
        while (true) {
            int best = -1;
            double best_norm = accept;
            for (size_t i = 0; i < remaining.size(); ++i) {
                if (used[i]) continue;
                const double nn = norm2(remaining[i]);
                if (nn > best_norm) {
                    best_norm = nn;
                    best = static_cast<int>(i);
                }
            }
            if (best < 0) break;
            used[best] = true;
            auto v = remaining[best];
            for (double& x : v) x /= best_norm;
            basis.push_back(v);
            for (size_t i = 0; i < remaining.size(); ++i) {
                if (used[i]) continue;
                const double proj = dot(remaining[i], v);
                for (int k = 0; k < s; ++k) remaining[i][k] -= proj * v[k];
            }
        }
    }
    ps.dim_w0 = static_cast<int>(basis.size());
    ps.y = s - ps.dim_w0;

    // complement: extend the same basis by standard island vectors, pivoting
    // on residual norm, until W is exhausted; exactly y vectors by dimension
    {
        std::vector<std::vector<double>> candidates;
        for (int isl = 0; isl < s; ++isl) {
            std::vector<double> e(s, 0.0);
            e[isl] = 1.0;
            candidates.push_back(std::move(e));
        }
        std::vector<std::vector<double>> complement_iso;
        auto project = [&](std::vector<double> v) {
            for (const auto& b : basis) {
                const double proj = dot(v, b);
                for (int k = 0; k < s; ++k) v[k] -= proj * b[k];
            }
            for (const auto& b : complement_iso) {
                const double proj = dot(v, b);
                for (int k = 0; k < s; ++k) v[k] -= proj * b[k];
            }
            return v;
        };
        while (static_cast<int>(complement_iso.size()) < ps.y) {
            int best = -1;
            double best_norm = 0.0;
            std::vector<double> best_residual;
            for (size_t i = 0; i < candidates.size(); ++i) {
                auto r = project(project(candidates[i]));
                const double nn = norm2(r);
                if (nn > best_norm + 1e-15) {
                    best_norm = nn;
                    best = static_cast<int>(i);
                    best_residual = std::move(r);
                }
            }
            if (best < 0) throw std::logic_error("phi_system: complement construction failed");
            for (double& x : best_residual) x /= best_norm;
            complement_iso.push_back(std::move(best_residual));
        }
        // back to domain coordinates: value on domain d is iso[I(d)]/sqrt(t(I))
        for (const auto& iso : complement_iso) {
            std::vector<double> dom(t, 0.0);
            for (int d = 0; d < t; ++d) {
                const int isl = is.island_of_domain[d];
                dom[d] = iso[isl] / std::sqrt(static_cast<double>(is.islands[isl].size()));
            }
            ps.complement_basis.push_back(std::move(dom));
        }
    }
    return ps;
}

std::vector<BoundReport> dim_w0_bound_check(const PhiSystem& ps, const IslandSet& is,
                                            const Graph& g, std::optional<int> genus,
                                            bool three_connected, int n_head) {
    const int smalls = is.smalls();
    const int d = g.max_degree();
    std::vector<BoundReport> reports;

    BoundReport deg;
    deg.check = "dim_w0_degree_bound";
    deg.n = n_head;
    deg.observed = ps.dim_w0;
    deg.bound = d > 0 ? static_cast<double>(smalls) / d : 0.0;
    deg.direction = BoundDirection::ge;
    if (n_head == 1) {
        deg.status = BoundStatus::skipped;
        deg.skip_reason = kOutsideRegime;
    } else {
        deg.status = BoundReport::evaluate(deg.observed, deg.bound, deg.direction);
    }
    reports.push_back(deg);

    BoundReport gen;
    gen.check = "dim_w0_genus_bound";
    gen.n = n_head;
    gen.observed = ps.dim_w0;
    gen.direction = BoundDirection::ge;
    if (n_head == 1) {
        gen.status = BoundStatus::skipped;
        gen.skip_reason = kOutsideRegime;
    } else if (!three_connected) {
        gen.status = BoundStatus::skipped;
        gen.skip_reason = "graph is not 3-connected";
    } else if (!genus) {
        gen.status = BoundStatus::skipped;
        gen.skip_reason = "genus unknown";
    } else {
        const int g2 = 2 * *genus - 2;
        gen.bound = (smalls - 14.0 * g2) / 6.0;
        gen.bound_clamped = (smalls - 14.0 * std::max(0, g2)) / 6.0;
        gen.status = BoundReport::evaluate(gen.observed, gen.bound, gen.direction);
        gen.status_clamped = BoundReport::evaluate(gen.observed, *gen.bound_clamped, gen.direction);
    }
    reports.push_back(gen);
    return reports;
}

std::vector<BoundReport> codimension_bound_check(const PhiSystem& ps, const NodalPartition& np,
                                                 const Graph& g, std::optional<int> genus,
                                                 bool three_connected, int n_head) {
    const int t = np.t();
    const int d = g.max_degree();
    std::vector<BoundReport> reports;

    BoundReport deg;
    deg.check = "codim_degree_bound";
    deg.n = n_head;
    deg.observed = ps.y;
    deg.bound = d > 0 ? (d - 1.0) / d * t : 0.0;
    if (n_head == 1) {
        deg.status = BoundStatus::skipped;
        deg.skip_reason = kOutsideRegime;
    } else {
        deg.status = BoundReport::evaluate(deg.observed, deg.bound, deg.direction);
    }
    reports.push_back(deg);

    BoundReport gen;
    gen.check = "codim_genus_bound";
    gen.n = n_head;
    gen.observed = ps.y;
    if (n_head == 1) {
        gen.status = BoundStatus::skipped;
        gen.skip_reason = kOutsideRegime;
    } else if (!three_connected) {
        gen.status = BoundStatus::skipped;
        gen.skip_reason = "graph is not 3-connected";
    } else if (!genus) {
        gen.status = BoundStatus::skipped;
        gen.skip_reason = "genus unknown";
    } else {
        const int g2 = 2 * *genus - 2;
        gen.bound = 5.0 / 6.0 * t + 14.0 / 6.0 * g2;
        gen.bound_clamped = 5.0 / 6.0 * t + 14.0 / 6.0 * std::max(0, g2);
        gen.status = BoundReport::evaluate(gen.observed, gen.bound, gen.direction);
        gen.status_clamped = BoundReport::evaluate(gen.observed, *gen.bound_clamped, gen.direction);
    }
    reports.push_back(gen);
    return reports;
}

nlohmann::json nodal_report_json(const NodalPartition& np, const IslandSet& is,
                                 const PhiSystem& ps) {
    nlohmann::json j;
    j["t"] = np.t();
    j["s"] = is.s();
    j["smalls"] = is.smalls();
    j["larges"] = is.larges();
    j["y"] = ps.y;
    j["dimW0"] = ps.dim_w0;
    j["domains"] = nlohmann::json::array();
    for (int d = 0; d < np.t(); ++d)
        j["domains"].push_back({{"sign", np.domain_sign[d] > 0 ? "+" : "-"},
                                {"vertices", np.domains[d]}});
    j["islands"] = nlohmann::json::array();
    for (int i = 0; i < is.s(); ++i)
        j["islands"].push_back({{"domains", is.islands[i]}, {"small", is.is_small(i)}});
    j["merge_trace"] = nlohmann::json::array();
    for (const auto& step : is.merge_trace)
        j["merge_trace"].push_back({step.node, step.island_a, step.island_b});
    j["V0"] = is.v0;
    return j;
}

MergeOrderScan island_merge_order_scan(const NodalPartition& np, const SchrodingerOperator& op,
                                       int max_regions) {
    const Graph& g = op.graph();
    const int t = np.t();

    // initial region partition, canonical form: sorted list of sorted lists
    IslandSet base = build_islands(np, op);
    MergeOrderScan scan;
    if (static_cast<int>(base.regions.size()) > max_regions) return scan;
    scan.explored = true;

    using Partition = std::vector<std::vector<int>>;
    std::set<Partition> visited;
    std::set<Partition> final_states;

    auto adjacent_islands = [&](const Partition& islands, const std::vector<int>& island_of,
                                int v) {
        std::set<int> ids;
        for (int w : g.neighbors(v)) {
            const int dom = np.domain_of[w];
            if (dom >= 0) ids.insert(island_of[dom]);
        }
        return ids;
    };

    auto index_of = [&](const Partition& islands) {
        std::vector<int> island_of(t, -1);
        for (size_t i = 0; i < islands.size(); ++i)
            for (int d : islands[i]) island_of[d] = static_cast<int>(i);
        return island_of;
    };

    std::vector<Partition> stack{base.regions};
    visited.insert(base.regions);
    while (!stack.empty()) {
        Partition cur = std::move(stack.back());
        stack.pop_back();
        ++scan.orders_explored;
        const auto island_of = index_of(cur);
        bool any = false;
        for (int v : np.nodes) {
            const auto ids = adjacent_islands(cur, island_of, v);
            if (ids.size() != 2) continue;
            const int ia = *ids.begin();
            const int ib = *std::next(ids.begin());
            if (cur[ia].size() != 1 && cur[ib].size() != 1) continue;
            any = true;
            Partition next = cur;
            auto merged = next[ia];
            merged.insert(merged.end(), next[ib].begin(), next[ib].end());
            std::sort(merged.begin(), merged.end());
            next.erase(next.begin() + std::max(ia, ib));
            next.erase(next.begin() + std::min(ia, ib));
            next.push_back(std::move(merged));
            std::sort(next.begin(), next.end());
            if (visited.insert(next).second) stack.push_back(std::move(next));
        }
        if (!any) final_states.insert(cur);
    }
    scan.distinct_outcomes = static_cast<int>(final_states.size());
    scan.unique_outcome = scan.distinct_outcomes == 1;
    return scan;
}

}  // namespace nodalgeo
