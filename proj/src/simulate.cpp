#include "tqclear/simulate.hpp"

#include <cmath>

#include "tqclear/textio.hpp"

namespace tqclear {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in (0, 1], built from the top 53 bits so the draw does not depend
// on library-specific distribution code.
double uniform_pos(std::mt19937_64& g) {
    return ((g() >> 11) + 1.0) * 0x1p-53;
}

}  // namespace

std::mt19937_64 episode_stream(std::uint64_t seed, std::uint64_t episode) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ episode));
}

EpisodeOutcome simulate_episode(const ModelParams& params, const PolicySpec& policy,
                                const SystemState& start, std::mt19937_64& stream) {
    if (!start.in_state_space())
        throw std::invalid_argument("simulate_episode: invalid start state " + start.str());
    EpisodeOutcome out;
    SystemState s = start;
    while (!s.is_terminal()) {
        const double rate0 = s.station0 * params.mu0;
        const double rate1 = s.station1 * params.mu1;
        const double rate2 = s.station2 > 0 ? params.mu2 : 0.0;
        const double rate = rate0 + rate1 + rate2;
        out.cost += cost_rate(s, params) * (-std::log(uniform_pos(stream)) / rate);
        ++out.events;
        const double pick = uniform_pos(stream) * rate;
        const bool pull = s.queue0 >= 1;
        if (pick <= rate0) {
            s = s.after_route(action_of(policy, s));
        } else if (pick <= rate0 + rate1) {
            s = pull ? SystemState{s.queue0 - 1, s.station0 + 1, s.station1 - 1, s.station2}
                     : SystemState{0, s.station0, s.station1 - 1, s.station2};
        } else {
            s = pull ? SystemState{s.queue0 - 1, s.station0 + 1, s.station1, s.station2 - 1}
                     : SystemState{0, s.station0, s.station1, s.station2 - 1};
        }
    }
    return out;
}

namespace {

SimEstimate run(const SimConfig& config, std::string* trace) {
    if (config.episodes < 1) throw std::invalid_argument("estimate: episodes must be >= 1");
    config.params.validate();
    // Welford in episode-index order: stable and independent of scheduling.
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t ep = 0; ep < config.episodes; ++ep) {
        auto stream = episode_stream(config.seed, ep);
        const EpisodeOutcome e = simulate_episode(config.params, config.policy, config.start, stream);
        const double d0 = e.cost - mean;
        mean += d0 / static_cast<double>(ep + 1);
        m2 += d0 * (e.cost - mean);
        if (trace)
            *trace += csv_line({std::to_string(ep), format_g12(e.cost), std::to_string(e.events)});
    }
    SimEstimate est;
    est.episodes = config.episodes;
    est.seed = config.seed;
    const double n = static_cast<double>(config.episodes);
    est.mean = mean;
    est.sd = config.episodes > 1 ? std::sqrt(std::max(0.0, m2 / (n - 1.0))) : 0.0;
    est.se = est.sd / std::sqrt(n);
    return est;
}

}  // namespace

SimEstimate estimate(const SimConfig& config) { return run(config, nullptr); }

SimEstimate estimate_with_trace(const SimConfig& config, std::string& per_episode_csv) {
    per_episode_csv += "episode,cost,events\n";
    return run(config, &per_episode_csv);
}

}  // namespace tqclear
