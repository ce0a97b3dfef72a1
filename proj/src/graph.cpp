#include "nodalgeo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

#include "nodalgeo/rng.hpp"

namespace nodalgeo {

namespace {

bool connected_after_removal(const Graph& g, const std::vector<bool>& removed) {
    const int n = g.vertex_count();
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            if (start < 0) start = v;
            ++alive;
        }
    }
    if (alive <= 1) return true;
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (removed[w] || seen[w]) continue;
            seen[w] = true;
            ++reached;
            q.push(w);
        }
    }
    return reached == alive;
}

}  // namespace

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& pairs) : n_(vertex_count) {
    if (vertex_count <= 0) throw std::invalid_argument("graph needs a positive vertex count");
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range [0, n)");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        dedup.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(dedup.begin(), dedup.end());
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    std::vector<bool> removed(n_, false);
    connected_ = connected_after_removal(*this, removed);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_complete() const {
    return edge_count() == n_ * (n_ - 1) / 2;
}

void Graph::require_connected(const char* op) const {
    if (!connected_)
        throw std::invalid_argument(std::string(op) + " requires a connected graph");
}

Graph from_edge_list(const std::vector<std::pair<int, int>>& pairs, int n) {
    return Graph(n, pairs);
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
    g.require_connected("vertex_connectivity_at_least");
    if (k <= 0) return true;
    const int n = g.vertex_count();
    if (g.is_complete()) return n > k;
    if (n <= k) return false;  // non-complete graphs have connectivity <= n - 2

    // enumerate all removal sets of size < k
    std::vector<bool> removed(n, false);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int remaining) -> bool {
        if (!connected_after_removal(g, removed)) return false;
        if (remaining == 0) return true;
        for (int v = start; v < n; ++v) {
            removed[v] = true;
            const bool ok = self(self, v + 1, remaining - 1);
            removed[v] = false;
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0, k - 1);
}

std::vector<int> vertex_boundary(const Graph& g, const std::vector<int>& d) {
    std::vector<bool> in_d(g.vertex_count(), false);
    for (int v : d) in_d.at(v) = true;
    std::set<int> boundary;
    for (int v : d)
        for (int w : g.neighbors(v))
            if (!in_d[w]) boundary.insert(w);
    return {boundary.begin(), boundary.end()};
}

void validate_rotation(const Graph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.order.size()) != g.vertex_count())
        throw std::invalid_argument("rotation system covers the wrong number of vertices");
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> sorted = rot.order[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v))
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its neighbors");
    }
}

SurfaceStats trace_faces(const Graph& g, const RotationSystem& rot) {
    g.require_connected("trace_faces");
    validate_rotation(g, rot);
    const int n = g.vertex_count();
    const int e = g.edge_count();

    SurfaceStats stats;
    stats.v = n;
    stats.e = e;
    if (e == 0) {  // single vertex on the sphere
        stats.f = 1;
        stats.genus = 0;
        return stats;
    }

    // position of u within v's rotation
    std::vector<std::vector<int>> pos(n);
    for (int v = 0; v < n; ++v) {
        pos[v].assign(n, -1);
        for (size_t i = 0; i < rot.order[v].size(); ++i) pos[v][rot.order[v][i]] = static_cast<int>(i);
    }

    // directed edges indexed as 2*edge_index + (u > v)
    std::vector<std::vector<int>> edge_index(n);
    for (int v = 0; v < n; ++v) edge_index[v].assign(n, -1);
    for (int i = 0; i < e; ++i) {
        auto [u, v] = g.edges()[i];
        edge_index[u][v] = 2 * i;
        edge_index[v][u] = 2 * i + 1;
    }

    std::vector<bool> visited(2 * e, false);
    int faces = 0;
    for (int start = 0; start < 2 * e; ++start) {
        if (visited[start]) continue;
        ++faces;
        int cur = start;
        while (!visited[cur]) {
            visited[cur] = true;
            const auto [a, b] = g.edges()[cur / 2];
            const int u = (cur % 2 == 0) ? a : b;
            const int v = (cur % 2 == 0) ? b : a;
            const auto& order = rot.order[v];
            const int next_pos = (pos[v][u] + 1) % static_cast<int>(order.size());
            const int w = order[next_pos];
            cur = edge_index[v][w];
        }
    }
    stats.f = faces;
    const int euler_deficit = 2 - n + e - faces;
    if (euler_deficit % 2 != 0 || euler_deficit < 0)
        throw std::logic_error("face tracing produced an invalid Euler characteristic");
    stats.genus = euler_deficit / 2;
    return stats;
}

GenusSearch minimal_genus(const Graph& g, long long budget) {
    g.require_connected("minimal_genus");
    const int n = g.vertex_count();
    GenusSearch result;

    // trees always trace to a single face, so every embedding is planar
    if (g.edge_count() == n - 1) {
        result.genus = 0;
        RotationSystem rot;
        rot.order.resize(n);
        for (int v = 0; v < n; ++v) rot.order[v] = g.neighbors(v);
        result.witness = std::move(rot);
        return result;
    }

    long long total = 1;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        for (int k = 2; k < d; ++k) {
            total *= k;
            if (total > budget) {
                return result;  // exceeded; genus stays empty
            }
        }
    }

    const int e = g.edge_count();

    // odometer over per-vertex rotations: first neighbor anchored, the rest
    // run through next_permutation, which enumerates each cyclic order once
    RotationSystem rot;
    rot.order.resize(n);
    std::vector<std::vector<int>> tails(n);
    for (int v = 0; v < n; ++v) {
        rot.order[v] = g.neighbors(v);
        tails[v].assign(g.neighbors(v).begin() + (g.degree(v) > 0 ? 1 : 0), g.neighbors(v).end());
    }

    // flat lookup tables reused across the whole enumeration; pos is patched
    // only for vertices whose rotation changed
    std::vector<int> edge_id(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < e; ++i) {
        auto [u, v] = g.edges()[i];
        edge_id[static_cast<size_t>(u) * n + v] = 2 * i;
        edge_id[static_cast<size_t>(v) * n + u] = 2 * i + 1;
    }
    std::vector<int> pos(static_cast<size_t>(n) * n, -1);
    auto refresh_pos = [&](int v) {
        const auto& order = rot.order[v];
        for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(v) * n + order[i]] = static_cast<int>(i);
    };
    for (int v = 0; v < n; ++v) refresh_pos(v);

    std::vector<int> visited(2 * e, -1);
    auto count_faces = [&](int epoch) {
        int faces = 0;
        for (int start = 0; start < 2 * e; ++start) {
            if (visited[start] == epoch) continue;
            ++faces;
            int cur = start;
            while (visited[cur] != epoch) {
                visited[cur] = epoch;
                const auto [a, b] = g.edges()[cur / 2];
                const int u = (cur % 2 == 0) ? a : b;
                const int v = (cur % 2 == 0) ? b : a;
                const auto& order = rot.order[v];
                int p = pos[static_cast<size_t>(v) * n + u] + 1;
                if (p == static_cast<int>(order.size())) p = 0;
                cur = edge_id[static_cast<size_t>(v) * n + order[p]];
            }
        }
        return faces;
    };

    int best = -1;
    RotationSystem best_rot;
    auto apply = [&](int v) {
        rot.order[v].clear();
        if (!g.neighbors(v).empty()) rot.order[v].push_back(g.neighbors(v)[0]);
        rot.order[v].insert(rot.order[v].end(), tails[v].begin(), tails[v].end());
        refresh_pos(v);
    };

    bool done = false;
    int epoch = 0;
    while (!done) {
        ++result.enumerated;
        const int faces = count_faces(epoch++);
        const int genus = (2 - n + e - faces) / 2;
        if (best < 0 || genus < best) {
            best = genus;
            best_rot = rot;
            if (best == 0) break;  // cannot improve on planar
        }
        // advance odometer
        done = true;
        for (int v = 0; v < n; ++v) {
            if (std::next_permutation(tails[v].begin(), tails[v].end())) {
                apply(v);
                done = false;
                break;
            }
            apply(v);  // tails[v] wrapped to sorted order
        }
    }
    result.genus = best;
    result.witness = std::move(best_rot);
    return result;
}

namespace {

VGReport vg_exhaustive(const Graph& g) {
    const int n = g.vertex_count();
    VGReport report;
    report.exhaustive = true;
    const int max_size = n / 2;

    std::vector<std::uint32_t> nbr_mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbr_mask[v] |= (1u << w);

    const std::uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int size = __builtin_popcount(mask);
        if (size > max_size) continue;
        ++report.subsets_checked;
        std::uint32_t boundary = 0;
        std::uint32_t rest = mask;
        while (rest) {
            const int v = __builtin_ctz(rest);
            rest &= rest - 1;
            boundary |= nbr_mask[v];
        }
        boundary &= ~mask;
        const int b = __builtin_popcount(boundary);
        if (static_cast<double>(b) * b < static_cast<double>(size)) {
            std::vector<int> witness;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) witness.push_back(v);
            report.status = VGStatus::violated;
            report.witness = std::move(witness);
            return report;
        }
    }
    report.status = VGStatus::satisfied;
    return report;
}

}  // namespace

VGReport vg_check(const Graph& g, int max_exhaustive_n, long long budget, std::uint64_t seed) {
    g.require_connected("vg_check");
    const int n = g.vertex_count();
    if (n <= std::min(max_exhaustive_n, 31)) return vg_exhaustive(g);

    // sampled search: random connected-ish seeds grown greedily to keep the
    // boundary small at every size
    VGReport report;
    report.exhaustive = false;
    Rng rng(seed);
    const int max_size = n / 2;

    std::vector<bool> in_d(n), on_boundary(n);
    for (long long iter = 0; iter < budget; ++iter) {
        std::fill(in_d.begin(), in_d.end(), false);
        std::fill(on_boundary.begin(), on_boundary.end(), false);
        std::vector<int> d;
        int start = rng.next_int(0, n - 1);
        d.push_back(start);
        in_d[start] = true;
        while (static_cast<int>(d.size()) <= max_size) {
            ++report.subsets_checked;
            const auto boundary = vertex_boundary(g, d);
            if (static_cast<double>(boundary.size()) * boundary.size() <
                static_cast<double>(d.size())) {
                report.status = VGStatus::violated;
                report.witness = d;
                return report;
            }
            if (boundary.empty() || static_cast<int>(d.size()) == max_size) break;
            // grow by the boundary vertex adding the fewest new boundary vertices
            int best_v = -1;
            long long best_growth = 1LL << 60;
            for (int v : boundary) {
                long long growth = 0;
                for (int w : g.neighbors(v))
                    if (!in_d[w] && w != v) ++growth;
                if (growth < best_growth) {
                    best_growth = growth;
                    best_v = v;
                }
            }
            d.push_back(best_v);
            in_d[best_v] = true;
            std::sort(d.begin(), d.end());
        }
        if (report.subsets_checked >= budget) break;
    }
    report.status = VGStatus::not_falsified;
    return report;
}

const char* to_string(VGStatus s) {
    switch (s) {
        case VGStatus::satisfied: return "satisfied";
        case VGStatus::violated: return "violated";
        case VGStatus::not_falsified: return "not-falsified";
    }
    return "?";
}

}  // namespace nodalgeo
