#include "tqclear/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace tqclear {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr int kExactJobLimit = 30;

}  // namespace

int ExactAudit::sign(const SystemState& s) const {
    if (!s.is_decision_state())
        throw std::invalid_argument("ExactAudit::sign: not a decision state: " + s.str());
    return signs_[space_.index_of(s)];
}

ExactAudit solve_exact(const ModelParams& params, int n_max) {
    params.validate();
    if (n_max < 1 || n_max > kExactJobLimit)
        throw std::invalid_argument("solve_exact: n_max must be in [1, " +
                                    std::to_string(kExactJobLimit) + "]");
    StateSpace space(n_max);

    const Rational mu0(params.mu0), mu1(params.mu1), mu2(params.mu2);
    const Rational h0(params.h0), h1(params.h1), h2(params.h2);

    std::vector<Rational> values(space.size(), Rational(0));
    std::vector<std::int8_t> signs(space.size(), 0);

    for (std::size_t rank = 1; rank < space.size(); ++rank) {
        const SystemState s = space.state_at(rank);
        const Rational d = s.station0 * mu0 + s.station1 * mu1 + (s.station2 > 0 ? mu2 : Rational(0));
        Rational acc = ((s.queue0 + s.station0) * h0 + s.station1 * h1 + s.station2 * h2) / d;
        const bool pull = s.queue0 >= 1;
        if (s.station1 > 0) {
            const SystemState next = pull ? SystemState{s.queue0 - 1, s.station0 + 1, s.station1 - 1, s.station2}
                                          : SystemState{0, s.station0, s.station1 - 1, s.station2};
            acc += s.station1 * mu1 / d * values[space.index_of(next)];
        }
        if (s.station2 > 0) {
            const SystemState next = pull ? SystemState{s.queue0 - 1, s.station0 + 1, s.station1, s.station2 - 1}
                                          : SystemState{0, s.station0, s.station1, s.station2 - 1};
            acc += mu2 / d * values[space.index_of(next)];
        }
        if (s.station0 > 0) {
            const Rational& v1 = values[space.index_of(s.after_route(Action::Station1))];
            const Rational& v2 = values[space.index_of(s.after_route(Action::Station2))];
            const int cmp = v1.compare(v2);
            signs[rank] = static_cast<std::int8_t>(cmp < 0 ? -1 : (cmp > 0 ? 1 : 0));
            acc += s.station0 * mu0 / d * (cmp <= 0 ? v1 : v2);
        }
        values[rank] = acc;
    }

    std::vector<double> approx(space.size());
    for (std::size_t rank = 0; rank < space.size(); ++rank)
        approx[rank] = values[rank].convert_to<double>();
    return ExactAudit(std::move(space), std::move(approx), std::move(signs));
}

}  // namespace tqclear
