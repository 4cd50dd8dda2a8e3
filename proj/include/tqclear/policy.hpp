#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tqclear/solve.hpp"

namespace tqclear {

/// Queue-length cutoff; kInfiniteThreshold means "never switch to Station 1".
using QueueThreshold = std::int64_t;
constexpr QueueThreshold kInfiniteThreshold = std::numeric_limits<QueueThreshold>::max();

/// A routing rule on decision states. Policies are immutable values and
/// evaluation is pure.
///
/// The two baseline rules are the threshold rule at 0 and at infinity; the
/// blocking-aware rule is the per-layout rule with cutoffs (inf, inf, 0).
struct PolicySpec {
    enum class Kind : std::uint8_t {
        Optimal,         ///< read the routing table of a solved instance
        AlwaysStation1,  ///< threshold 0
        Threshold,       ///< Station 1 iff queue0 >= t
        AlwaysStation2,  ///< threshold infinity
        Blocking,        ///< Station 2 iff it is idle, else Station 1
        Custom,          ///< per-(station0,station1,station2) thresholds
    };

    Kind kind = Kind::AlwaysStation1;
    QueueThreshold t = 0;  // Threshold
    QueueThreshold custom_200 = kInfiniteThreshold;  // Custom, at (i,2,0,0)
    QueueThreshold custom_110 = kInfiniteThreshold;  // Custom, at (i,1,1,0)
    QueueThreshold custom_101 = kInfiniteThreshold;  // Custom, at (i,1,0,1)
    const SolveResult* reference = nullptr;  // Optimal

    static PolicySpec optimal(const SolveResult& ref) {
        PolicySpec p;
        p.kind = Kind::Optimal;
        p.reference = &ref;
        return p;
    }
    static PolicySpec always_station1() { return {}; }
    static PolicySpec always_station2() {
        PolicySpec p;
        p.kind = Kind::AlwaysStation2;
        return p;
    }
    static PolicySpec threshold(QueueThreshold t) {
        PolicySpec p;
        p.kind = Kind::Threshold;
        p.t = t;
        return p;
    }
    static PolicySpec blocking_aware() {
        PolicySpec p;
        p.kind = Kind::Blocking;
        return p;
    }
    static PolicySpec custom(QueueThreshold n200, QueueThreshold n110, QueueThreshold n101) {
        PolicySpec p;
        p.kind = Kind::Custom;
        p.custom_200 = n200;
        p.custom_110 = n110;
        p.custom_101 = n101;
        return p;
    }

    /// Round-trips through parse_policy.
    std::string str() const;
};

/// Routing decision of a policy at a decision state. The single-job boundary
/// state (0,1,0,0) is treated by threshold rules as any queue0 = 0 state and
/// by the custom rule with the (2,0,0) cutoff.
Action action_of(const PolicySpec& policy, const SystemState& s);

/// Parses "optimal | always1 | always2 | threshold:T | blocking |
/// custom:N200,N110,N101" (each N may be "inf"). An optimal spec still needs
/// a SolveResult attached before use.
PolicySpec parse_policy(const std::string& text);

/// Run-length encoding of the optimal routing over queue lengths at a fixed
/// two-job decision layout.
struct DecisionStructure {
    SystemState layout;          ///< (0,j,k,l) representative
    struct Run {
        Action action;
        long long count;
    };
    std::vector<Run> runs;       ///< over queue0 = 0..max_queue
    long long max_queue = -1;
    /// Set when the sequence is Station 2 up to a cutoff and Station 1 after
    /// it (including all-1 as cutoff 0); kInfiniteThreshold when no switch
    /// happens in range.
    std::optional<QueueThreshold> threshold;

    bool is_threshold() const { return threshold.has_value(); }
    std::string str() const;
};

/// Decision structures of a solved instance at the three two-job layouts
/// (2,0,0), (1,1,0), (1,0,1), for queue0 = 0..n_max-2.
std::array<DecisionStructure, 3> extract_thresholds(const SolveResult& result);

}  // namespace tqclear
