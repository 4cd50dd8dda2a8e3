#include "tqclear/solve.hpp"

#include <algorithm>
#include <cmath>

namespace tqclear {

namespace detail {

double bellman_rhs(const StateSpace& space, const ModelParams& p, std::size_t rank,
                   const std::vector<double>& values) {
    const SystemState s = space.state_at(rank);
    const double d = total_rate(s, p);
    double acc = cost_rate(s, p) / d;
    const bool pull_from_queue = s.queue0 >= 1;
    if (s.station1 > 0) {
        const SystemState next = pull_from_queue
                                     ? SystemState{s.queue0 - 1, s.station0 + 1, s.station1 - 1, s.station2}
                                     : SystemState{0, s.station0, s.station1 - 1, s.station2};
        acc += s.station1 * p.mu1 / d * values[space.index_of(next)];
    }
    if (s.station2 > 0) {
        const SystemState next = pull_from_queue
                                     ? SystemState{s.queue0 - 1, s.station0 + 1, s.station1, s.station2 - 1}
                                     : SystemState{0, s.station0, s.station1, s.station2 - 1};
        acc += p.mu2 / d * values[space.index_of(next)];
    }
    if (s.station0 > 0) {
        const double v1 = values[space.index_of(s.after_route(Action::Station1))];
        const double v2 = values[space.index_of(s.after_route(Action::Station2))];
        acc += s.station0 * p.mu0 / d * std::min(v1, v2);
    }
    return acc;
}

}  // namespace detail

SolveResult solve(const ModelParams& params, int n_max, SolveOptions options) {
    params.validate();
    if (options.tie_tol < 0.0) throw std::invalid_argument("solve: tie_tol must be >= 0");
    StateSpace space(n_max);

    std::vector<double> values(space.size(), 0.0);
    std::vector<Action> actions(space.size(), Action::Station1);
    std::vector<std::uint8_t> ties(space.size(), 0);

    for (std::size_t rank = 1; rank < space.size(); ++rank) {
        const SystemState s = space.state_at(rank);
        values[rank] = detail::bellman_rhs(space, params, rank, values);
        if (s.is_decision_state()) {
            const double v1 = values[space.index_of(s.after_route(Action::Station1))];
            const double v2 = values[space.index_of(s.after_route(Action::Station2))];
            const double delta = v1 - v2;
            if (std::fabs(delta) < options.tie_tol * (1.0 + std::fabs(std::min(v1, v2)))) {
                actions[rank] = options.tie_break;
                ties[rank] = 1;
            } else {
                actions[rank] = delta < 0.0 ? Action::Station1 : Action::Station2;
            }
        }
    }
    return SolveResult(params, std::move(space), options, std::move(values), std::move(actions),
                       std::move(ties));
}

std::size_t SolveResult::decision_index(const SystemState& s) const {
    if (!s.is_decision_state())
        throw std::invalid_argument("not a decision state: " + s.str());
    if (!space_.contains(s))
        throw std::out_of_range("state out of solved range: " + s.str() + " with n_max " +
                                std::to_string(space_.n_max()));
    return space_.index_of(s);
}

Action SolveResult::action(const SystemState& s) const { return actions_[decision_index(s)]; }

bool SolveResult::tie(const SystemState& s) const { return ties_[decision_index(s)] != 0; }

double decision_diff(const SolveResult& result, const SystemState& s) {
    if (!s.is_decision_state())
        throw std::invalid_argument("decision_diff: not a decision state: " + s.str());
    const auto& space = result.space();
    const SystemState to1 = s.after_route(Action::Station1);
    const SystemState to2 = s.after_route(Action::Station2);
    if (!space.contains(to1) || !space.contains(to2))
        throw std::out_of_range("decision_diff: successors of " + s.str() + " not solved");
    return result.value(to1) - result.value(to2);
}

double check_residuals(const SolveResult& result) {
    const auto& space = result.space();
    const auto& values = result.values_by_rank();
    double worst = 0.0;
    for (std::size_t rank = 1; rank < space.size(); ++rank) {
        const double rhs = detail::bellman_rhs(space, result.params(), rank, values);
        const double rel = std::fabs(values[rank] - rhs) / (1.0 + std::fabs(values[rank]));
        worst = std::max(worst, rel);
    }
    return worst;
}

}  // namespace tqclear
