#include "nodalgeo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

#include "nodalgeo/rng.hpp"

namespace nodalgeo {

BoundReport davies_check(int t, int n, int r) {
    BoundReport rep;
    rep.check = "davies";
    rep.n = n;
    rep.observed = t;
    rep.bound = n + r - 1;
    rep.status = BoundReport::evaluate(rep.observed, rep.bound, rep.direction);
    return rep;
}

BoundReport degree_bound_check(int t, int n, int d) {
    BoundReport rep;
    rep.check = "degree_bound";
    rep.n = n;
    rep.observed = t;
    rep.bound = static_cast<double>(d) * (n - 1);
    if (n < 2) {
        rep.status = BoundStatus::skipped;
        rep.skip_reason = "n = 1: bound is 0 while t >= 1";
    } else {
        rep.status = BoundReport::evaluate(rep.observed, rep.bound, rep.direction);
    }
    return rep;
}

BoundReport genus_bound_check(int t, int n, std::optional<int> genus, bool three_connected) {
    BoundReport rep;
    rep.check = "genus_bound";
    rep.n = n;
    rep.observed = t;
    if (n < 2) {
        rep.status = BoundStatus::skipped;
        rep.skip_reason = "n = 1: outside theorem regime";
        return rep;
    }
    if (!three_connected) {
        rep.status = BoundStatus::skipped;
        rep.skip_reason = "graph is not 3-connected";
        return rep;
    }
    if (!genus) {
        rep.status = BoundStatus::skipped;
        rep.skip_reason = "genus unknown";
        return rep;
    }
    const int g2 = 2 * *genus - 2;
    rep.bound = 6.0 * (n - 1) + 14.0 * g2;
    rep.bound_clamped = 6.0 * (n - 1) + 14.0 * std::max(0, g2);
    rep.status = BoundReport::evaluate(rep.observed, rep.bound, rep.direction);
    rep.status_clamped = BoundReport::evaluate(rep.observed, *rep.bound_clamped, rep.direction);
    return rep;
}

double duval_reiner_identity(const DenseMatrix& A, const NodalPartition& np,
                             const std::vector<double>& c) {
    const int t = np.t();
    const int n = A.rows;
    if (static_cast<int>(c.size()) != t)
        throw std::invalid_argument("duval_reiner_identity: one coefficient per domain required");
    if (A.rows != A.cols || n != static_cast<int>(np.u.size()))
        throw std::invalid_argument("duval_reiner_identity: matrix size mismatch");

    // w_i = u restricted to domain i; u_tilde = sum w_i (node entries zeroed)
    std::vector<std::vector<double>> w(t, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) {
        const int d = np.domain_of[v];
        if (d >= 0) w[d][v] = np.u[v];
    }
    std::vector<double> u_tilde(n, 0.0), f(n, 0.0);
    for (int i = 0; i < t; ++i)
        for (int v = 0; v < n; ++v) {
            u_tilde[v] += w[i][v];
            f[v] += c[i] * w[i][v];
        }

    const auto af = matvec(A, f);
    const double lhs = dot(f, af);

    const auto au = matvec(A, u_tilde);
    std::vector<std::vector<double>> aw(t);
    for (int i = 0; i < t; ++i) aw[i] = matvec(A, w[i]);

    double rhs = 0.0;
    for (int i = 0; i < t; ++i) rhs += c[i] * c[i] * dot(w[i], au);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            const double diff = c[i] - c[j];
            rhs -= 0.5 * diff * diff * dot(w[i], aw[j]);
        }

    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

std::vector<int> pick_independence_set(const std::vector<std::vector<double>>& basis, double tol) {
    if (basis.empty()) throw std::invalid_argument("pick_independence_set: empty basis");
    const int r = static_cast<int>(basis.size());
    const int n = static_cast<int>(basis[0].size());
    if (r > n) throw std::invalid_argument("pick_independence_set: more functions than vertices");

    // greedy pivoted column selection: each vertex is the column
    // (f_1(v), ..., f_r(v)); take the largest residual after projecting out
    // the span of the columns already chosen, smallest index breaking ties
    auto column = [&](int v) {
        std::vector<double> col(r);
        for (int i = 0; i < r; ++i) col[i] = basis[i][v];
        return col;
    };
    double max_norm = 0.0;
    for (int v = 0; v < n; ++v) max_norm = std::max(max_norm, norm2(column(v)));
    const double accept = tol * std::max(max_norm, 1e-300);

    std::vector<std::vector<double>> q;
    std::vector<int> picked;
    std::vector<bool> used(n, false);
    for (int step = 0; step < r; ++step) {
        int best = -1;
        double best_norm = accept;
        std::vector<double> best_res;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            auto res = column(v);
            for (const auto& b : q) {
                const double proj = dot(res, b);
                for (int k = 0; k < r; ++k) res[k] -= proj * b[k];
            }
            const double nn = norm2(res);
            if (nn > best_norm) {
                best_norm = nn;
                best = v;
                best_res = std::move(res);
            }
        }
        if (best < 0)
            throw std::invalid_argument("pick_independence_set: basis is rank-deficient");
        for (double& x : best_res) x /= best_norm;
        q.push_back(std::move(best_res));
        used[best] = true;
        picked.push_back(best);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

VanishingCombination vanishing_combination(const std::vector<std::vector<double>>& basis,
                                           const std::vector<int>& w_prime,
                                           const std::vector<int>& r_set) {
    const int r = static_cast<int>(basis.size());
    if (r < 2) throw std::invalid_argument("vanishing_combination: needs multiplicity r >= 2");
    const int expected = (r + 1) / 2;
    if (static_cast<int>(w_prime.size()) != expected)
        throw std::invalid_argument("vanishing_combination: |W'| must be ceil(r/2) = " +
                                    std::to_string(expected));

    DenseMatrix constraint(static_cast<int>(w_prime.size()), r);
    for (size_t row = 0; row < w_prime.size(); ++row)
        for (int i = 0; i < r; ++i) constraint(static_cast<int>(row), i) = basis[i][w_prime[row]];

    const auto null_basis = nullspace(constraint, 1e-12);
    if (null_basis.empty())
        throw std::runtime_error("vanishing_combination: empty null space (|W'| < r should hold)");

    const int q = static_cast<int>(null_basis.size());
    auto assemble = [&](const std::vector<double>& alpha) {
        std::vector<double> coeff(r, 0.0);
        for (int k = 0; k < q; ++k)
            for (int i = 0; i < r; ++i) coeff[i] += alpha[k] * null_basis[k][i];
        return coeff;
    };

    // deterministic candidates: each null-space direction, their plain sum,
    // and a handful of seeded generic combinations (a generic vector avoids
    // every "vanishes at v" hyperplane at once)
    std::vector<std::vector<double>> alphas;
    for (int k = 0; k < q; ++k) {
        std::vector<double> a(q, 0.0);
        a[k] = 1.0;
        alphas.push_back(std::move(a));
    }
    alphas.push_back(std::vector<double>(q, 1.0));
    Rng rng(0x5EEDULL + static_cast<std::uint64_t>(r));
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<double> a(q);
        for (double& x : a) x = rng.next_real(-1.0, 1.0);
        alphas.push_back(std::move(a));
    }

    VanishingCombination best;
    int best_count = -1;
    for (const auto& alpha : alphas) {
        const auto coeff = assemble(alpha);
        if (norm2(coeff) == 0.0) continue;
        std::vector<double> u(basis[0].size(), 0.0);
        for (int i = 0; i < r; ++i)
            for (size_t v = 0; v < u.size(); ++v) u[v] += coeff[i] * basis[i][v];
        const double scale = inf_norm(u);
        if (scale == 0.0) continue;
        int count = 0;
        for (int v : r_set)
            if (std::abs(u[v]) > 1e-8 * scale) ++count;
        if (count > best_count) {
            best_count = count;
            best.coefficients = coeff;
            best.u = std::move(u);
            best.nonzero_on_r = count;
        }
    }
    if (best_count < 0)
        throw std::runtime_error("vanishing_combination: all candidates degenerate");
    return best;
}

void node_component_and_z(MultiplicityCertificate& cert, const std::vector<double>& u,
                          const std::vector<int>& w_prime, const Graph& g, double tol_zero) {
    const int n = g.vertex_count();
    const double scale = inf_norm(u);
    std::vector<bool> is_node(n, false);
    for (int v = 0; v < n; ++v) is_node[v] = std::abs(u[v]) <= tol_zero * scale;
    for (int v : w_prime)
        if (!is_node[v])
            throw std::invalid_argument(
                "node_component_and_z: W' vertex " + std::to_string(v) +
                " is not a node of u at the given tolerance");

    std::vector<bool> in_comp(n, false);
    std::queue<int> q;
    for (int v : w_prime) {
        if (!in_comp[v]) {
            in_comp[v] = true;
            q.push(v);
        }
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (is_node[w] && !in_comp[w]) {
                in_comp[w] = true;
                q.push(w);
            }
        }
    }

    cert.w_prime = w_prime;
    cert.w_component.clear();
    cert.z.clear();
    for (int v = 0; v < n; ++v) {
        if (!in_comp[v]) continue;
        cert.w_component.push_back(v);
        for (int w : g.neighbors(v)) {
            if (!in_comp[w]) {
                cert.z.push_back(v);
                break;
            }
        }
    }
}

BoundReport inner_boundary_check(const MultiplicityCertificate& cert, VGStatus vg) {
    BoundReport rep;
    rep.check = "inner_boundary_bound";
    rep.n = cert.n;
    rep.observed = static_cast<double>(cert.z.size());
    rep.bound = std::sqrt(cert.r / 2.0) - 1.0;
    rep.direction = BoundDirection::ge;
    if (vg == VGStatus::violated) {
        rep.status = BoundStatus::skipped;
        rep.skip_reason = "volume-growth condition violated";
        return rep;
    }
    rep.status = BoundReport::evaluate(rep.observed, rep.bound, rep.direction);
    if (vg == VGStatus::not_falsified) rep.skip_reason = "VG not exhaustively checked";
    return rep;
}

BoundReport multiplicity_bound_check(int r, int n, std::optional<int> genus, bool three_connected,
                                     VGStatus vg) {
    BoundReport rep;
    rep.check = "multiplicity_bound";
    rep.n = n;
    rep.observed = r;
    if (n < 2) {
        rep.status = BoundStatus::skipped;
        rep.skip_reason = "n = 1: ground state is simple by Perron-Frobenius";
        return rep;
    }
    if (!three_connected) {
        rep.status = BoundStatus::skipped;
        rep.skip_reason = "graph is not 3-connected";
        return rep;
    }
    if (vg == VGStatus::violated) {
        rep.status = BoundStatus::skipped;
        rep.skip_reason = "volume-growth condition violated";
        return rep;
    }
    if (!genus) {
        rep.status = BoundStatus::skipped;
        rep.skip_reason = "genus unknown";
        return rep;
    }
    const int g2 = 2 * *genus - 2;
    const double inner = 6.0 * (n - 1) + 15.0 * g2;
    const double inner_clamped = 6.0 * (n - 1) + 15.0 * std::max(0, g2);
    rep.bound = 2.0 * inner * inner;
    rep.bound_clamped = 2.0 * inner_clamped * inner_clamped;
    rep.status = BoundReport::evaluate(rep.observed, rep.bound, rep.direction);
    rep.status_clamped = BoundReport::evaluate(rep.observed, *rep.bound_clamped, rep.direction);
    if (vg == VGStatus::not_falsified) rep.skip_reason = "VG not exhaustively checked";
    return rep;
}

std::vector<std::vector<int>> connected_vertex_sets(const Graph& g, int size) {
    const int n = g.vertex_count();
    std::set<std::vector<int>> sets;
    if (size <= 0 || size > n) return {};
    for (int start = 0; start < n; ++start) {
        // BFS prefix of the requested size, smallest-index frontier first
        std::vector<int> members{start};
        std::set<int> in{start};
        while (static_cast<int>(members.size()) < size) {
            int next = -1;
            for (int v : members) {
                for (int w : g.neighbors(v)) {
                    if (!in.count(w) && (next < 0 || w < next)) next = w;
                }
            }
            if (next < 0) break;
            members.push_back(next);
            in.insert(next);
        }
        if (static_cast<int>(members.size()) == size) {
            std::sort(members.begin(), members.end());
            sets.insert(members);
        }
    }
    return {sets.begin(), sets.end()};
}

}  // namespace nodalgeo
