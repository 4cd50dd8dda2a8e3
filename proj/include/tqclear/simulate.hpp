#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tqclear/policy.hpp"

namespace tqclear {

/// A seeded Monte Carlo run of the clearing system under a fixed policy.
struct SimConfig {
    ModelParams params;
    PolicySpec policy;
    SystemState start;
    std::uint64_t episodes = 1;
    std::uint64_t seed = 0;
};

struct SimEstimate {
    double mean = 0.0;
    double sd = 0.0;  ///< sample standard deviation (n-1)
    double se = 0.0;  ///< sd / sqrt(episodes)
    std::uint64_t episodes = 0;
    std::uint64_t seed = 0;
    std::string rng = "mt19937-64/splitmix64-substreams";
};

struct EpisodeOutcome {
    double cost = 0.0;
    std::uint64_t events = 0;
};

/// Independent per-episode random stream: a 64-bit generator seeded through
/// a splitmix64 mix of (seed, episode), so the episode set is the same under
/// any execution order.
std::mt19937_64 episode_stream(std::uint64_t seed, std::uint64_t episode);

/// One event-driven run until the system clears: exponential sojourns drawn
/// by inverse CDF at the state's total rate, holding cost accumulated as
/// rate x sojourn, completing server chosen proportionally to its rate.
EpisodeOutcome simulate_episode(const ModelParams& params, const PolicySpec& policy,
                                const SystemState& start, std::mt19937_64& stream);

/// Mean/sd/se over config.episodes independent episodes; deterministic for a
/// fixed (config, seed).
SimEstimate estimate(const SimConfig& config);

/// As estimate(), also appending one "episode,cost,events" CSV row per
/// episode to per_episode_csv.
SimEstimate estimate_with_trace(const SimConfig& config, std::string& per_episode_csv);

}  // namespace tqclear
