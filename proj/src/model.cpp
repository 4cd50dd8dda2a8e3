#include "tqclear/model.hpp"

#include <cmath>
#include <cstdio>

namespace tqclear {

void ModelParams::validate() const {
    auto bad = [](double v) { return !(std::isfinite(v) && v > 0.0); };
    const char* names[] = {"mu0", "mu1", "mu2", "h0", "h1", "h2"};
    const double vals[] = {mu0, mu1, mu2, h0, h1, h2};
    for (int s = 0; s < 6; ++s) {
        if (bad(vals[s])) {
            throw std::invalid_argument(std::string("ModelParams: ") + names[s] +
                                        " must be finite and strictly positive, got " +
                                        std::to_string(vals[s]));
        }
    }
}

const char* to_string(Action a) { return a == Action::Station1 ? "1" : "2"; }

std::string SystemState::str() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%d,%d,%d,%d)", queue0, station0, station1, station2);
    return buf;
}

double total_rate(const SystemState& s, const ModelParams& p) {
    if (s.is_terminal()) throw std::domain_error("total_rate: no active servers in " + s.str());
    return s.station0 * p.mu0 + s.station1 * p.mu1 + (s.station2 > 0 ? p.mu2 : 0.0);
}

double cost_rate(const SystemState& s, const ModelParams& p) {
    return (s.queue0 + s.station0) * p.h0 + s.station1 * p.h1 + s.station2 * p.h2;
}

namespace {

// Two-job (j,k,l) layouts in enumeration order for a fixed total; the order
// is queue0+station0 ascending with a lexicographic tiebreak.
constexpr int kTwoJobLayouts[6][3] = {
    {0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0},
};

int layout_offset(const SystemState& s) {
    switch (s.station0 * 9 + s.station1 * 3 + s.station2) {
        case 2: return 0;   // (0,0,2)
        case 4: return 1;   // (0,1,1)
        case 6: return 2;   // (0,2,0)
        case 10: return 3;  // (1,0,1)
        case 12: return 4;  // (1,1,0)
        case 18: return 5;  // (2,0,0)
        default: return -1;
    }
}

}  // namespace

StateSpace::StateSpace(int n_max) : n_max_(n_max) {
    if (n_max < 1) throw std::invalid_argument("StateSpace: n_max must be >= 1");
    if (n_max > kMaxJobs)
        throw std::invalid_argument("StateSpace: n_max exceeds the supported bound " +
                                    std::to_string(kMaxJobs));
    states_.reserve(4 + 6 * static_cast<std::size_t>(n_max - 1));
    states_.emplace_back(0, 0, 0, 0);
    states_.emplace_back(0, 0, 0, 1);
    states_.emplace_back(0, 0, 1, 0);
    states_.emplace_back(0, 1, 0, 0);
    for (int total = 2; total <= n_max; ++total) {
        for (const auto& jkl : kTwoJobLayouts) {
            states_.emplace_back(total - 2, jkl[0], jkl[1], jkl[2]);
        }
    }
}

std::size_t StateSpace::index_of(const SystemState& s) const {
    if (!contains(s)) throw std::out_of_range("StateSpace: " + s.str() + " not in the space");
    const int total = s.total();
    if (total == 0) return 0;
    if (total == 1) {
        if (s.station2 == 1) return 1;
        if (s.station1 == 1) return 2;
        return 3;
    }
    return 4 + 6 * static_cast<std::size_t>(total - 2) + layout_offset(s);
}

std::vector<SystemState> enumerate_states(int n_max) { return StateSpace(n_max).states(); }

}  // namespace tqclear
