#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace nodalgeo {

enum class BoundStatus { holds, violated, skipped };
enum class BoundDirection { le, ge };  // holds <=> observed <= bound, resp. observed >= bound

const char* to_string(BoundStatus s);

/// One record per inequality or identity evaluation. Violations are
/// first-class data, never exceptions; they carry enough witness payload to
/// re-check the claim from scratch.
struct BoundReport {
    std::string check;
    std::string graph_id;
    int n = 0;    // 1-based eigenvalue group head; 0 when not applicable
    int fn = -1;  // basis-function index within the group; -1 for group-level checks
    double observed = 0.0;
    double bound = 0.0;
    BoundDirection direction = BoundDirection::le;
    BoundStatus status = BoundStatus::skipped;
    std::optional<double> bound_clamped;        // genus bounds: variant with max(0, 2g-2)
    std::optional<BoundStatus> status_clamped;
    std::string skip_reason;
    nlohmann::json witness;

    static BoundStatus evaluate(double observed, double bound, BoundDirection dir);
    nlohmann::json to_json() const;
};

}  // namespace nodalgeo
