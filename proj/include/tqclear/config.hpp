#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tqclear/model.hpp"

namespace tqclear {

/// Bad command line or config file contents.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Values read from a line-oriented `key = value` config file with
/// [section] headers. Sections: [model] (mu0 mu1 mu2 h0 h1 h2), [solve]
/// (n_max tie_break tie_tol), [policy] (policy), [sweep] (n_max states
/// threads), [simulate] (episodes seed start policy). Unknown sections or
/// keys are rejected; environment variables are never consulted.
struct RunConfig {
    std::optional<ModelParams> model;

    std::optional<int> n_max;
    std::optional<int> tie_break;
    std::optional<double> tie_tol;

    std::optional<std::string> policy;

    std::optional<int> sweep_n_max;
    std::optional<std::vector<SystemState>> sweep_states;
    std::optional<unsigned> sweep_threads;

    std::optional<std::uint64_t> episodes;
    std::optional<std::uint64_t> seed;
    std::optional<SystemState> sim_start;
    std::optional<std::string> sim_policy;
};

/// Parses config text; throws UsageError with line context on any problem.
RunConfig parse_run_config(const std::string& text);

/// Parses "i,j,k,l" into a state (validated against the state space).
SystemState parse_state(const std::string& text);

}  // namespace tqclear
