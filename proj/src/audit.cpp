#include "nodalgeo/audit.hpp"

#include <algorithm>
#include <cmath>

#include "nodalgeo/rng.hpp"

namespace nodalgeo {

const char* to_string(GenusProvenance p) {
    switch (p) {
        case GenusProvenance::rotation_system: return "rotation-system";
        case GenusProvenance::exhaustive_minimal: return "exhaustive-minimal";
        case GenusProvenance::unknown: return "unknown";
    }
    return "?";
}

int AuditResult::hard_violations() const {
    int count = 0;
    for (const auto& rep : reports)
        if ((rep.check == "davies" || rep.check == "degree_bound") &&
            rep.status == BoundStatus::violated)
            ++count;
    return count;
}

int AuditResult::violations_total() const {
    int count = 0;
    for (const auto& rep : reports)
        if (rep.status == BoundStatus::violated) ++count;
    return count;
}

nlohmann::json AuditResult::to_json() const {
    nlohmann::json j;
    j["graph_id"] = graph_id;
    j["max_degree"] = max_degree;
    j["three_connected"] = three_connected;
    if (genus)
        j["genus"] = {{"value", *genus}, {"provenance", to_string(genus_provenance)}};
    else
        j["genus"] = {{"provenance", to_string(genus_provenance)}};
    j["vg"] = {{"status", to_string(vg.status)}, {"exhaustive", vg.exhaustive}};
    if (vg.witness) j["vg"]["witness"] = *vg.witness;
    j["eigenvalues"] = eigenvalues;
    j["groups"] = nlohmann::json::array();
    for (const auto& grp : groups)
        j["groups"].push_back(
            {{"n", grp.head + 1}, {"lambda", grp.lambda}, {"multiplicity", grp.size}});
    j["reports"] = nlohmann::json::array();
    for (const auto& rep : reports) j["reports"].push_back(rep.to_json());
    j["violations"] = violations_total();
    j["hard_violations"] = hard_violations();
    return j;
}

namespace {

BoundReport identity_report(const char* name, int n, int fn, double discrepancy, double tol) {
    BoundReport rep;
    rep.check = name;
    rep.n = n;
    rep.fn = fn;
    rep.observed = discrepancy;
    rep.bound = tol;
    rep.status = BoundReport::evaluate(discrepancy, tol, BoundDirection::le);
    return rep;
}

/// max over V0 rows of |sum_D phi_v(D)| relative to the row's own scale
double phi_row_sum_defect(const PhiSystem& ps) {
    double worst = 0.0;
    for (int row = 0; row < ps.phi.rows; ++row) {
        double sum = 0.0, scale = 0.0;
        for (int d = 0; d < ps.phi.cols; ++d) {
            sum += ps.phi(row, d);
            scale = std::max(scale, std::abs(ps.phi(row, d)));
        }
        if (scale > 0.0) worst = std::max(worst, std::abs(sum) / scale);
    }
    return worst;
}

}  // namespace

AuditResult full_audit(const SchrodingerOperator& op, const AuditOptions& options) {
    const Graph& g = op.graph();
    g.require_connected("full_audit");
    const RunConfig& cfg = options.config;

    AuditResult result;
    result.graph_id = options.graph_id;
    result.max_degree = g.max_degree();
    result.three_connected = vertex_connectivity_at_least(g, 3);
    result.vg = vg_check(g, cfg.max_exhaustive_n, options.vg_budget, cfg.seed);
    result.genus = options.genus;
    result.genus_provenance = options.genus_provenance;
    if (!result.genus && options.search_genus) {
        const auto search = minimal_genus(g, options.genus_budget);
        if (!search.exceeded()) {
            result.genus = search.genus;
            result.genus_provenance = GenusProvenance::exhaustive_minimal;
        }
    }

    const Spectrum spec = eigendecompose(op, cfg.tol_eig);
    result.eigenvalues = spec.eigenvalues();
    result.groups = spec.groups();
    const int d = result.max_degree;

    {
        BoundReport rep;
        rep.check = "eigen_residual";
        rep.n = 0;
        rep.observed = spec.max_residual();
        rep.bound = cfg.tol_residual * (1.0 + operator_inf_norm(op.matrix()));
        rep.status = BoundReport::evaluate(rep.observed, rep.bound, rep.direction);
        result.reports.push_back(rep);

        BoundReport orth;
        orth.check = "eigen_orthonormality";
        orth.n = 0;
        orth.observed = spec.max_orthonormality_defect();
        orth.bound = cfg.tol_residual;
        orth.status = BoundReport::evaluate(orth.observed, orth.bound, orth.direction);
        result.reports.push_back(orth);

        BoundReport perron;
        perron.check = "perron";
        perron.n = 1;
        perron.observed = result.groups.empty() ? 0 : result.groups.front().size;
        perron.bound = 1;
        perron.status = perron_check(spec, cfg.tol_zero) ? BoundStatus::holds
                                                         : BoundStatus::violated;
        result.reports.push_back(perron);
    }

    for (const auto& grp : spec.groups()) {
        const int n_head = grp.head + 1;  // 1-based
        const int r = grp.size;

        std::vector<std::vector<double>> basis;
        for (int i = grp.head; i < grp.head + r; ++i) basis.push_back(spec.eigenvector(i));

        std::vector<std::vector<double>> functions = basis;
        if (r >= 2 && options.random_combinations > 0) {
            Rng rng(cfg.seed ^ (0x9E37ULL * static_cast<std::uint64_t>(n_head)));
            for (int extra = 0; extra < options.random_combinations; ++extra) {
                std::vector<double> u(basis[0].size(), 0.0);
                for (int i = 0; i < r; ++i) {
                    const double a = rng.next_real(-1.0, 1.0);
                    for (size_t v = 0; v < u.size(); ++v) u[v] += a * basis[i][v];
                }
                if (inf_norm(u) > 0.0) functions.push_back(std::move(u));
            }
        }

        for (size_t fi = 0; fi < functions.size(); ++fi) {
            const auto& u = functions[fi];
            const int fn = static_cast<int>(fi);

            const NodalPartition np = strong_domains(op, u, cfg.tol_zero);
            const IslandSet is = build_islands(np, op);
            const PhiSystem ps = phi_system(is, op, np, u);
            const int t = np.t();

            auto tag = [&](BoundReport rep) {
                rep.graph_id = options.graph_id;
                rep.fn = fn;
                if (rep.status == BoundStatus::violated) {
                    rep.witness = {{"eigenfunction", u}, {"t", t}, {"lambda", grp.lambda}};
                }
                result.reports.push_back(std::move(rep));
            };

            tag(davies_check(t, n_head, r));
            tag(degree_bound_check(t, n_head, d));
            tag(genus_bound_check(t, n_head, result.genus, result.three_connected));
            for (auto rep : dim_w0_bound_check(ps, is, g, result.genus, result.three_connected,
                                               n_head))
                tag(std::move(rep));
            for (auto rep : codimension_bound_check(ps, np, g, result.genus,
                                                    result.three_connected, n_head))
                tag(std::move(rep));

            {
                const auto claim = claim_small_island_adjacency(is, op, np, cfg.tol_residual);
                BoundReport rep;
                rep.check = "small_island_adjacency";
                rep.n = n_head;
                rep.observed = is.v0.empty() ? 3 : claim.min_adjacent;  // vacuous when V0 empty
                rep.bound = 3;
                rep.direction = BoundDirection::ge;
                rep.status = claim.holds ? BoundStatus::holds : BoundStatus::violated;
                if (is.v0.empty()) rep.skip_reason = "vacuous: V0 empty";
                if (claim.offending_node) rep.witness = {{"node", *claim.offending_node}};
                tag(std::move(rep));
            }

            tag(identity_report("phi_row_sum", n_head, fn, phi_row_sum_defect(ps), 1e-9));

            {
                // Rayleigh-shifted operator, the form the identity is used in
                DenseMatrix shifted = op.matrix();
                for (int i = 0; i < shifted.rows; ++i) shifted(i, i) -= grp.lambda;
                Rng rng(cfg.seed ^ (0xD1CEULL + static_cast<std::uint64_t>(n_head) * 31 + fi));
                std::vector<double> c(t);
                for (double& x : c) x = rng.next_real(-1.0, 1.0);
                tag(identity_report("duval_reiner", n_head, fn,
                                    duval_reiner_identity(shifted, np, c), 1e-9));
            }
        }

        // the multiplicity certificate pipeline runs once per group
        if (r >= 2) {
            const int w_size = (r + 1) / 2;
            const auto r_set = pick_independence_set(basis);
            const auto candidates = connected_vertex_sets(g, w_size);

            MultiplicityCertificate cert;
            cert.n = n_head;
            cert.r = r;
            cert.independence_set = r_set;

            VanishingCombination best;
            std::vector<int> best_w;
            int best_count = -1;
            size_t best_overlap = 0;
            for (const auto& w_prime : candidates) {
                const auto vc = vanishing_combination(basis, w_prime, r_set);
                size_t overlap = 0;
                for (int v : w_prime)
                    if (std::binary_search(r_set.begin(), r_set.end(), v)) ++overlap;
                if (vc.nonzero_on_r > best_count ||
                    (vc.nonzero_on_r == best_count && overlap < best_overlap)) {
                    best_count = vc.nonzero_on_r;
                    best = vc;
                    best_w = w_prime;
                    best_overlap = overlap;
                }
            }

            if (best_count >= 0) {
                cert.w_prime = best_w;
                cert.coefficients = best.coefficients;
                cert.u = best.u;
                cert.nonzero_on_r = best.nonzero_on_r;

                BoundReport vanish;
                vanish.check = "vanishing_combination";
                vanish.graph_id = options.graph_id;
                vanish.n = n_head;
                vanish.observed = best.nonzero_on_r;
                vanish.bound = w_size;  // at least half of R
                vanish.direction = BoundDirection::ge;
                vanish.status = BoundReport::evaluate(vanish.observed, vanish.bound,
                                                      vanish.direction);
                if (vanish.status == BoundStatus::violated)
                    vanish.witness = {{"w_prime", best_w}, {"R", r_set}, {"u", best.u}};
                result.reports.push_back(vanish);

                double on_w = 0.0;
                for (int v : best_w) on_w = std::max(on_w, std::abs(best.u[v]));
                result.reports.push_back([&] {
                    auto rep = identity_report("vanishing_on_w_prime", n_head, -1,
                                               on_w / inf_norm(best.u), 1e-8);
                    rep.graph_id = options.graph_id;
                    return rep;
                }());

                node_component_and_z(cert, best.u, best_w, g, cfg.tol_zero);
                auto zrep = inner_boundary_check(cert, result.vg.status);
                zrep.graph_id = options.graph_id;
                if (zrep.status == BoundStatus::violated)
                    zrep.witness = {{"w_prime", best_w}, {"component", cert.w_component},
                                    {"Z", cert.z}, {"r", r}};
                result.reports.push_back(zrep);
            }

            auto mrep = multiplicity_bound_check(r, n_head, result.genus, result.three_connected,
                                                 result.vg.status);
            mrep.graph_id = options.graph_id;
            result.reports.push_back(mrep);
        }
    }

    for (auto& rep : result.reports)
        if (rep.graph_id.empty()) rep.graph_id = options.graph_id;
    return result;
}

}  // namespace nodalgeo
