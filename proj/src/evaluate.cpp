#include "tqclear/evaluate.hpp"

namespace tqclear {

EvalResult evaluate_policy(const ModelParams& params, const PolicySpec& policy, int n_max) {
    params.validate();
    StateSpace space(n_max);
    std::vector<double> values(space.size(), 0.0);

    for (std::size_t rank = 1; rank < space.size(); ++rank) {
        const SystemState s = space.state_at(rank);
        const double d = total_rate(s, params);
        double acc = cost_rate(s, params) / d;
        const bool pull = s.queue0 >= 1;
        if (s.station1 > 0) {
            const SystemState next = pull ? SystemState{s.queue0 - 1, s.station0 + 1, s.station1 - 1, s.station2}
                                          : SystemState{0, s.station0, s.station1 - 1, s.station2};
            acc += s.station1 * params.mu1 / d * values[space.index_of(next)];
        }
        if (s.station2 > 0) {
            const SystemState next = pull ? SystemState{s.queue0 - 1, s.station0 + 1, s.station1, s.station2 - 1}
                                          : SystemState{0, s.station0, s.station1, s.station2 - 1};
            acc += params.mu2 / d * values[space.index_of(next)];
        }
        if (s.station0 > 0) {
            const SystemState next = s.after_route(action_of(policy, s));
            acc += s.station0 * params.mu0 / d * values[space.index_of(next)];
        }
        values[rank] = acc;
    }
    return EvalResult(params, std::move(space), policy.str(), std::move(values));
}

double relative_error(double v_policy, double v_opt) {
    if (!(v_opt > 0.0))
        throw std::domain_error("relative_error: optimal value must be positive, got " +
                                std::to_string(v_opt));
    return (v_policy - v_opt) / v_opt;
}

}  // namespace tqclear
