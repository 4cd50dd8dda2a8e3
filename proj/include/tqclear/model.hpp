#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqclear {

/// Service rates and holding costs of the two-server tandem clearing system.
///
/// Station 0 is the shared initial phase, Station 1 the parallel second-phase
/// facility, Station 2 the single-service facility. Holding costs are charged
/// per job per unit time at each station.
struct ModelParams {
    double mu0 = 0.0;  ///< service rate at Station 0
    double mu1 = 0.0;  ///< service rate at Station 1
    double mu2 = 0.0;  ///< service rate at Station 2
    double h0 = 0.0;   ///< holding cost at Station 0 (queue + in service)
    double h1 = 0.0;   ///< holding cost at Station 1
    double h2 = 0.0;   ///< holding cost at Station 2

    ModelParams() = default;
    ModelParams(double mu0_, double mu1_, double mu2_, double h0_, double h1_, double h2_)
        : mu0(mu0_), mu1(mu1_), mu2(mu2_), h0(h0_), h1(h1_), h2(h2_) {
        validate();
    }

    /// Throws std::invalid_argument unless all six values are finite and > 0.
    void validate() const;

    double mean_service0() const { return 1.0 / mu0; }
    double mean_service1() const { return 1.0 / mu1; }
    double mean_service2() const { return 1.0 / mu2; }

    /// Cost-to-serve ordering: a lone second-phase job is no more expensive at
    /// Station 2 than at Station 1 (h1/mu1 >= h2/mu2). The solver does not
    /// need this; several structural checkers do.
    bool station2_preferred() const { return h1 / mu1 >= h2 / mu2; }
};

/// Routing choice made when a Station-0 service completes.
enum class Action : std::uint8_t {
    Station1 = 1,
    Station2 = 2,
};

const char* to_string(Action a);

/// State (queue0, station0, station1, station2) of the clearing system:
/// jobs waiting at Station 0, in service at Station 0, in service at
/// Station 1, and present at Station 2 (including a blocked pair).
///
/// Valid states have either queue0 = 0 with at most one busy job, or an
/// arbitrary queue with exactly two busy jobs; (0,0,0,0) is the cleared
/// system.
struct SystemState {
    int queue0 = 0;
    int station0 = 0;
    int station1 = 0;
    int station2 = 0;

    SystemState() = default;
    SystemState(int i, int j, int k, int l) : queue0(i), station0(j), station1(k), station2(l) {}

    int total() const { return queue0 + station0 + station1 + station2; }
    int busy() const { return station0 + station1 + station2; }

    bool is_terminal() const { return total() == 0; }

    /// Membership in the reachable state space.
    bool in_state_space() const {
        if (queue0 < 0 || station0 < 0 || station1 < 0 || station2 < 0) return false;
        if (station0 > 2 || station1 > 2 || station2 > 2) return false;
        if (busy() == 2) return true;
        return queue0 == 0 && busy() <= 1;
    }

    /// States where a Station-0 completion forces a routing choice.
    bool is_decision_state() const {
        if (!in_state_space() || station0 == 0) return false;
        return busy() == 2 || (*this == SystemState{0, 1, 0, 0});
    }

    /// Decision states with both servers busy (excludes (0,1,0,0)).
    bool is_two_job_decision_state() const {
        return is_decision_state() && busy() == 2;
    }

    /// State after routing the finished Station-0 job; only meaningful on
    /// decision states.
    SystemState after_route(Action a) const {
        if (a == Action::Station1) return {queue0, station0 - 1, station1 + 1, station2};
        return {queue0, station0 - 1, station1, station2 + 1};
    }

    bool operator==(const SystemState&) const = default;

    std::string str() const;
};

/// Total active service rate of a state: station0*mu0 + station1*mu1 plus
/// mu2 when Station 2 is serving (a blocked second job adds no rate).
/// Throws std::domain_error at the cleared state.
double total_rate(const SystemState& s, const ModelParams& p);

/// Cost accrual rate of a state: (queue0+station0)*h0 + station1*h1 + station2*h2.
double cost_rate(const SystemState& s, const ModelParams& p);

/// Dense enumeration of all states with total() <= n_max, in an order where
/// every transition leads strictly backwards: sorted by total jobs, then by
/// queue0+station0, then lexicographically on the components. Values can
/// therefore be computed in a single forward pass.
class StateSpace {
public:
    static constexpr int kMaxJobs = 100000;

    explicit StateSpace(int n_max);

    int n_max() const { return n_max_; }
    std::size_t size() const { return states_.size(); }

    const std::vector<SystemState>& states() const { return states_; }
    const SystemState& state_at(std::size_t rank) const { return states_[rank]; }

    bool contains(const SystemState& s) const {
        return s.in_state_space() && s.total() <= n_max_;
    }

    /// O(1) rank of a state; throws std::out_of_range outside the space.
    std::size_t index_of(const SystemState& s) const;

private:
    int n_max_;
    std::vector<SystemState> states_;
};

/// All states with total() <= n_max in solve order (see StateSpace).
std::vector<SystemState> enumerate_states(int n_max);

}  // namespace tqclear
