#pragma once

#include <string>
#include <vector>

#include "tqclear/solve.hpp"

namespace tqclear {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

/// One verified value-function inequality: the margin is oriented so that
/// nonnegative means the inequality holds; the worst margin over the checked
/// range is recorded together with the state attaining it.
struct InequalityCheck {
    std::string id;
    std::string hypothesis;  ///< when it applies; reason when skipped
    std::string range;       ///< quantifier range actually checked
    CheckStatus status = CheckStatus::Skipped;
    double worst_margin = 0.0;
    SystemState witness{};

    bool passed() const { return status == CheckStatus::Pass; }
};

/// Bounds on value differences valid for all rates (with two rate-ordered
/// sub-families), checked over every in-range state:
///   one-job-add-station1 / -station2 / -station0: cost of one extra job
///     next to a lone job is at least the obvious single-service cost;
///   queue-growth: one more waiting job costs at least a Station-0 pass
///     plus the cheaper second phase;
///   handoff-station1/-station2: replacing a Station-0 service in progress
///     with a routed job plus a fresh arrival costs at least the cheaper
///     second phase;
///   decision-gap-upper, station2-handoff-floor (require mu1 >= mu2);
///   blocked-decision-gap-upper, blocked-refill-upper (require mu2 > mu1
///     and the cost-to-serve ordering).
/// Always returns the same ten check ids in the same order.
std::vector<InequalityCheck> verify_value_bounds(const SolveResult& result);

/// The two equal-rate exchange bounds (require mu1 == mu2; the second also
/// needs the cost-to-serve ordering).
std::vector<InequalityCheck> verify_equal_rate_bounds(const SolveResult& result);

/// Full fixed catalogue: value bounds followed by equal-rate bounds.
std::vector<InequalityCheck> verify_all_bounds(const SolveResult& result);

/// CSV with header check_id,status,worst_margin,witness_i,witness_j,
/// witness_k,witness_l,range.
std::string bounds_csv(const std::vector<InequalityCheck>& checks);

/// Human-readable block per check.
std::string format_bounds(const std::vector<InequalityCheck>& checks);

}  // namespace tqclear
