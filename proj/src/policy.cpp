#include "tqclear/policy.hpp"

#include <charconv>

namespace tqclear {

namespace {

std::string threshold_str(QueueThreshold t) {
    return t == kInfiniteThreshold ? "inf" : std::to_string(t);
}

QueueThreshold parse_threshold(const std::string& text) {
    if (text == "inf") return kInfiniteThreshold;
    QueueThreshold value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw std::invalid_argument("policy: bad threshold '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::string PolicySpec::str() const {
    switch (kind) {
        case Kind::Optimal: return "optimal";
        case Kind::AlwaysStation1: return "always1";
        case Kind::AlwaysStation2: return "always2";
        case Kind::Threshold: return "threshold:" + threshold_str(t);
        case Kind::Blocking: return "blocking";
        case Kind::Custom:
            return "custom:" + threshold_str(custom_200) + "," + threshold_str(custom_110) + "," +
                   threshold_str(custom_101);
    }
    return "?";
}

Action action_of(const PolicySpec& policy, const SystemState& s) {
    if (!s.is_decision_state())
        throw std::invalid_argument("action_of: not a decision state: " + s.str());
    switch (policy.kind) {
        case PolicySpec::Kind::Optimal:
            if (policy.reference == nullptr)
                throw std::invalid_argument("action_of: optimal policy has no solved reference");
            return policy.reference->action(s);
        case PolicySpec::Kind::AlwaysStation1:
            return Action::Station1;
        case PolicySpec::Kind::AlwaysStation2:
            return Action::Station2;
        case PolicySpec::Kind::Threshold:
            return s.queue0 >= policy.t ? Action::Station1 : Action::Station2;
        case PolicySpec::Kind::Blocking:
            return s.station2 == 0 ? Action::Station2 : Action::Station1;
        case PolicySpec::Kind::Custom: {
            QueueThreshold cutoff;
            if (s.station0 == 2 || s.busy() == 1) cutoff = policy.custom_200;
            else if (s.station1 == 1) cutoff = policy.custom_110;
            else cutoff = policy.custom_101;
            return s.queue0 >= cutoff ? Action::Station1 : Action::Station2;
        }
    }
    throw std::logic_error("action_of: unhandled policy kind");
}

PolicySpec parse_policy(const std::string& text) {
    if (text == "optimal") {
        PolicySpec p;
        p.kind = PolicySpec::Kind::Optimal;
        return p;
    }
    if (text == "always1") return PolicySpec::always_station1();
    if (text == "always2") return PolicySpec::always_station2();
    if (text == "blocking") return PolicySpec::blocking_aware();
    if (text.rfind("threshold:", 0) == 0)
        return PolicySpec::threshold(parse_threshold(text.substr(10)));
    if (text.rfind("custom:", 0) == 0) {
        const auto parts = split(text.substr(7), ',');
        if (parts.size() != 3)
            throw std::invalid_argument("policy: custom needs three thresholds, got '" + text + "'");
        return PolicySpec::custom(parse_threshold(parts[0]), parse_threshold(parts[1]),
                                  parse_threshold(parts[2]));
    }
    throw std::invalid_argument("policy: unknown spec '" + text + "'");
}

std::string DecisionStructure::str() const {
    std::string out = "(i," + std::to_string(layout.station0) + "," + std::to_string(layout.station1) + "," +
           std::to_string(layout.station2) + "): ";
    if (threshold.has_value()) {
        out += *threshold == kInfiniteThreshold
                   ? "station 2 for all i <= " + std::to_string(max_queue)
                   : "station 1 iff i >= " + std::to_string(*threshold);
    } else {
        out += "non-threshold,";
    }
    out += " [";
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (r) out += " ";
        out += std::string(to_string(runs[r].action)) + "x" + std::to_string(runs[r].count);
    }
    out += "]";
    return out;
}

std::array<DecisionStructure, 3> extract_thresholds(const SolveResult& result) {
    const std::array<SystemState, 3> layouts = {SystemState{0, 2, 0, 0}, SystemState{0, 1, 1, 0},
                                                SystemState{0, 1, 0, 1}};
    std::array<DecisionStructure, 3> out;
    const long long max_queue = result.n_max() - 2;
    for (std::size_t which = 0; which < layouts.size(); ++which) {
        DecisionStructure& ds = out[which];
        ds.layout = layouts[which];
        ds.max_queue = max_queue;
        for (long long i = 0; i <= max_queue; ++i) {
            const Action a = result.action(
                {static_cast<int>(i), ds.layout.station0, ds.layout.station1, ds.layout.station2});
            if (!ds.runs.empty() && ds.runs.back().action == a) ++ds.runs.back().count;
            else ds.runs.push_back({a, 1});
        }
        // A threshold structure is some run of 2s followed by a run of 1s.
        if (ds.runs.size() == 1) {
            ds.threshold = ds.runs[0].action == Action::Station1 ? QueueThreshold{0}
                                                                 : kInfiniteThreshold;
        } else if (ds.runs.size() == 2 && ds.runs[0].action == Action::Station2) {
            ds.threshold = ds.runs[0].count;
        }
    }
    return out;
}

}  // namespace tqclear
