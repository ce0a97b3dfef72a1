#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nodalgeo/bounds.hpp"
#include "nodalgeo/spectrum.hpp"

namespace nodalgeo {

struct RunConfig {
    double tol_zero = 1e-9;
    double tol_eig = 1e-8;
    double tol_residual = 1e-8;
    std::uint64_t seed = 42;
    int max_exhaustive_n = 20;  // VG exhaustiveness cutoff
    std::string format = "text";
};

enum class GenusProvenance { rotation_system, exhaustive_minimal, unknown };

const char* to_string(GenusProvenance p);

struct AuditOptions {
    RunConfig config;
    std::string graph_id = "graph";
    std::optional<int> genus;  // pre-supplied (e.g. from a rotation system)
    GenusProvenance genus_provenance = GenusProvenance::unknown;
    long long genus_budget = 2'000'000;   // rotation systems; search skipped beyond this
    long long vg_budget = 100'000;        // sampled subsets when not exhaustive
    int random_combinations = 0;          // extra in-eigenspace combinations per group
    bool search_genus = true;             // run minimal_genus when no genus was supplied
};

struct AuditResult {
    std::string graph_id;
    std::optional<int> genus;
    GenusProvenance genus_provenance = GenusProvenance::unknown;
    bool three_connected = false;
    VGReport vg;
    int max_degree = 0;
    std::vector<double> eigenvalues;
    std::vector<MultiplicityGroup> groups;
    std::vector<BoundReport> reports;

    /// Violations of the as-stated Davies and degree bounds; this is what the
    /// verify command's exit code counts. Genus-variant divergences are
    /// reported but never counted here.
    int hard_violations() const;
    int violations_total() const;
    nlohmann::json to_json() const;
};

/// Runs the whole pipeline for every multiplicity-group head: strong domains,
/// regions/islands, the phi system, and every bound and identity check, plus
/// the independence-set construction per group with r >= 2.
AuditResult full_audit(const SchrodingerOperator& op, const AuditOptions& options);

}  // namespace nodalgeo
