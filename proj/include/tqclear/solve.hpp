#pragma once

#include <cstdint>
#include <vector>

#include "tqclear/model.hpp"

namespace tqclear {

/// Knobs for the routing decision when the two branch values are within
/// tolerance of each other. The tolerance is relative: |delta| <
/// tie_tol * (1 + |v|) with v the smaller branch value.
struct SolveOptions {
    Action tie_break = Action::Station2;
    double tie_tol = 1e-9;
};

/// Exact value table and optimal routing table for all states up to a job
/// budget. Immutable after construction; cheap to share read-only.
class SolveResult {
public:
    SolveResult(ModelParams params, StateSpace space, SolveOptions options,
                std::vector<double> values, std::vector<Action> actions,
                std::vector<std::uint8_t> ties)
        : params_(params),
          space_(std::move(space)),
          options_(options),
          values_(std::move(values)),
          actions_(std::move(actions)),
          ties_(std::move(ties)) {}

    const ModelParams& params() const { return params_; }
    const StateSpace& space() const { return space_; }
    const SolveOptions& options() const { return options_; }
    int n_max() const { return space_.n_max(); }

    bool covers(const SystemState& s) const { return space_.contains(s); }

    /// Minimal expected cost to clear the system from s.
    double value(const SystemState& s) const { return values_[space_.index_of(s)]; }

    /// Optimal routing at a decision state; throws outside the decision set
    /// or the solved range.
    Action action(const SystemState& s) const;

    /// True when the two branch values at a decision state were within the
    /// tie tolerance, so the recorded action is the configured tie break.
    bool tie(const SystemState& s) const;

    const std::vector<double>& values_by_rank() const { return values_; }

private:
    std::size_t decision_index(const SystemState& s) const;

    ModelParams params_;
    StateSpace space_;
    SolveOptions options_;
    std::vector<double> values_;
    std::vector<Action> actions_;
    std::vector<std::uint8_t> ties_;
};

/// Solves the optimality equations exactly in one pass over the state space
/// (each state only references earlier-ranked states, so no iteration is
/// involved). n_max must be in [1, StateSpace::kMaxJobs].
SolveResult solve(const ModelParams& params, int n_max, SolveOptions options = {});

/// Difference between routing the finished job to Station 1 versus
/// Station 2 at a decision state: value(i,j-1,k+1,l) - value(i,j-1,k,l+1).
/// Negative means Station 1 is the better choice.
double decision_diff(const SolveResult& result, const SystemState& s);

/// Largest relative deviation between the stored values and a recomputation
/// of the optimality equations' right-hand side. An exact solve keeps this
/// at rounding-noise level (<= 1e-9 by contract).
double check_residuals(const SolveResult& result);

namespace detail {

/// Recomputes the optimality-equation right-hand side for the state at
/// `rank` from a value table; shared by the solver and the residual check.
double bellman_rhs(const StateSpace& space, const ModelParams& p, std::size_t rank,
                   const std::vector<double>& values);

}  // namespace detail

}  // namespace tqclear
