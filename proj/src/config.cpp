#include "tqclear/config.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace tqclear {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw UsageError("config: bad number for " + key + ": '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw UsageError("config: bad integer for " + key + ": '" + value + "'");
    return v;
}

}  // namespace

SystemState parse_state(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    std::istringstream in(trim(text));
    while (std::getline(in, cur, ','))
        parts.push_back(static_cast<int>(parse_int("state component", trim(cur))));
    if (parts.size() != 4)
        throw UsageError("state must be i,j,k,l - got '" + text + "'");
    const SystemState s{parts[0], parts[1], parts[2], parts[3]};
    if (!s.in_state_space())
        throw UsageError("state " + s.str() + " is outside the state space");
    return s;
}

RunConfig parse_run_config(const std::string& text) {
    RunConfig out;
    std::map<std::string, double> model_values;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw UsageError("config line " + std::to_string(lineno) + ": malformed section");
            section = line.substr(1, line.size() - 2);
            if (section != "model" && section != "solve" && section != "policy" &&
                section != "sweep" && section != "simulate")
                throw UsageError("config line " + std::to_string(lineno) + ": unknown section [" +
                                 section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section == "model") {
            if (key != "mu0" && key != "mu1" && key != "mu2" && key != "h0" && key != "h1" &&
                key != "h2")
                throw UsageError("config line " + std::to_string(lineno) + ": unknown model key '" +
                                 key + "'");
            model_values[key] = parse_real(key, value);
        } else if (section == "solve") {
            if (key == "n_max") out.n_max = static_cast<int>(parse_int(key, value));
            else if (key == "tie_break") out.tie_break = static_cast<int>(parse_int(key, value));
            else if (key == "tie_tol") out.tie_tol = parse_real(key, value);
            else
                throw UsageError("config line " + std::to_string(lineno) + ": unknown solve key '" +
                                 key + "'");
        } else if (section == "policy") {
            if (key != "policy")
                throw UsageError("config line " + std::to_string(lineno) + ": unknown policy key '" +
                                 key + "'");
            out.policy = value;
        } else if (section == "sweep") {
            if (key == "n_max") out.sweep_n_max = static_cast<int>(parse_int(key, value));
            else if (key == "threads")
                out.sweep_threads = static_cast<unsigned>(parse_int(key, value));
            else if (key == "states") {
                std::vector<SystemState> states;
                std::istringstream groups(value);
                std::string group;
                while (std::getline(groups, group, ';')) states.push_back(parse_state(group));
                out.sweep_states = std::move(states);
            } else
                throw UsageError("config line " + std::to_string(lineno) + ": unknown sweep key '" +
                                 key + "'");
        } else if (section == "simulate") {
            if (key == "episodes") out.episodes = static_cast<std::uint64_t>(parse_int(key, value));
            else if (key == "seed") out.seed = static_cast<std::uint64_t>(parse_int(key, value));
            else if (key == "start") out.sim_start = parse_state(value);
            else if (key == "policy") out.sim_policy = value;
            else
                throw UsageError("config line " + std::to_string(lineno) +
                                 ": unknown simulate key '" + key + "'");
        } else {
            throw UsageError("config line " + std::to_string(lineno) +
                             ": key outside any section: '" + key + "'");
        }
    }
    if (!model_values.empty()) {
        for (const char* need : {"mu0", "mu1", "mu2", "h0", "h1", "h2"})
            if (!model_values.count(need))
                throw UsageError(std::string("config: [model] is missing ") + need);
        try {
            out.model = ModelParams(model_values["mu0"], model_values["mu1"], model_values["mu2"],
                                    model_values["h0"], model_values["h1"], model_values["h2"]);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("config: ") + e.what());
        }
    }
    if (out.tie_break && *out.tie_break != 1 && *out.tie_break != 2)
        throw UsageError("config: tie_break must be 1 or 2");
    return out;
}

}  // namespace tqclear
