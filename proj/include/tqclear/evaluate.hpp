#pragma once

#include "tqclear/policy.hpp"

namespace tqclear {

/// Exact cost-to-clear table under a fixed routing policy.
class EvalResult {
public:
    EvalResult(ModelParams params, StateSpace space, std::string policy_name,
               std::vector<double> values)
        : params_(params),
          space_(std::move(space)),
          policy_name_(std::move(policy_name)),
          values_(std::move(values)) {}

    const ModelParams& params() const { return params_; }
    const StateSpace& space() const { return space_; }
    const std::string& policy_name() const { return policy_name_; }
    int n_max() const { return space_.n_max(); }

    double value(const SystemState& s) const { return values_[space_.index_of(s)]; }
    const std::vector<double>& values_by_rank() const { return values_; }

private:
    ModelParams params_;
    StateSpace space_;
    std::string policy_name_;
    std::vector<double> values_;
};

/// Expected total cost of following `policy` from every state up to n_max.
/// Same single-pass recursion as solve(), with the policy's branch taken at
/// each decision state instead of the minimum.
EvalResult evaluate_policy(const ModelParams& params, const PolicySpec& policy, int n_max);

/// Suboptimality (v_policy - v_opt) / v_opt. Requires v_opt > 0; the cleared
/// state is the only state with zero optimal cost.
double relative_error(double v_policy, double v_opt);

}  // namespace tqclear
