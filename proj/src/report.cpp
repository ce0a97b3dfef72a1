#include "nodalgeo/report.hpp"

namespace nodalgeo {

const char* to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::holds: return "holds";
        case BoundStatus::violated: return "violated";
        case BoundStatus::skipped: return "skipped";
    }
    return "?";
}

BoundStatus BoundReport::evaluate(double observed, double bound, BoundDirection dir) {
    const bool ok = dir == BoundDirection::le ? observed <= bound : observed >= bound;
    return ok ? BoundStatus::holds : BoundStatus::violated;
}

nlohmann::json BoundReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["graph_id"] = graph_id;
    j["n"] = n;
    if (fn >= 0) j["fn"] = fn;
    j["observed"] = observed;
    j["bound"] = bound;
    j["direction"] = direction == BoundDirection::le ? "<=" : ">=";
    j["status"] = to_string(status);
    if (bound_clamped) j["bound_clamped"] = *bound_clamped;
    if (status_clamped) j["status_clamped"] = to_string(*status_clamped);
    if (!skip_reason.empty()) j["skip_reason"] = skip_reason;
    if (!witness.is_null()) j["witness"] = witness;
    return j;
}

}  // namespace nodalgeo
