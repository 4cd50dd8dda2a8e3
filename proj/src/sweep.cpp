#include "tqclear/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

#include "tqclear/policy.hpp"
#include "tqclear/textio.hpp"

namespace tqclear {

SweepGrid SweepGrid::study_defaults() {
    SweepGrid g;
    g.mu0 = {1, 2, 5, 10, 20, 30, 40};
    g.mu1 = {10};
    g.mu2 = {4, 6, 8, 12, 15, 25};
    g.h0 = {0.01, 0.05, 0.1, 0.5, 1};
    g.h1 = {1};
    g.h2 = {0.2, 0.5, 1, 1.5, 2};
    return g;
}

namespace {

struct AggregateInput {
    std::string regime;
    // err sequences in row order, one per policy.
    std::vector<std::vector<double>> row_errs;
    // per-config means in config order, one per policy.
    std::vector<std::vector<double>> config_errs;
};

void append_stats(std::vector<SweepAggregate>& out, const std::string& regime, std::size_t policy,
                  const std::vector<double>& xs, const std::string& mode_prefix) {
    if (xs.empty()) return;
    double mx = xs[0], sum = 0.0;
    for (double x : xs) {
        mx = std::max(mx, x);
        sum += x;
    }
    const double n = static_cast<double>(xs.size());
    const double mean = sum / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sd_sample = xs.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    const double sd_pop = std::sqrt(ss / n);
    out.push_back({regime, policy, mx, mean, sd_sample, xs.size(), mode_prefix + "-sample"});
    out.push_back({regime, policy, mx, mean, sd_pop, xs.size(), mode_prefix + "-population"});
}

// Rows arrive grouped by configuration (states innermost); both aggregation
// modes and the worst cases are derived from that ordering alone, which is
// what makes the CSV round-trip exact.
void aggregate_rows(const std::vector<SweepRow>& rows, std::size_t n_policies,
                    std::vector<SweepAggregate>& aggregates,
                    std::vector<SweepWorstCase>& worst_cases) {
    const std::string regimes[2] = {"m1<=m2", "m1>m2"};
    for (int reg = 0; reg < 2; ++reg) {
        const bool want_le = reg == 0;
        for (std::size_t pi = 0; pi < n_policies; ++pi) {
            std::vector<double> row_errs, config_errs;
            std::size_t best_row = rows.size();
            ModelParams cur{};
            double config_sum = 0.0;
            std::size_t config_count = 0;
            auto flush_config = [&]() {
                if (config_count > 0) config_errs.push_back(config_sum / config_count);
                config_sum = 0.0;
                config_count = 0;
            };
            for (std::size_t ri = 0; ri < rows.size(); ++ri) {
                const SweepRow& row = rows[ri];
                if (row.m1_le_m2 != want_le) continue;
                if (config_count > 0 && !(cur.mu0 == row.params.mu0 && cur.mu1 == row.params.mu1 &&
                                          cur.mu2 == row.params.mu2 && cur.h0 == row.params.h0 &&
                                          cur.h1 == row.params.h1 && cur.h2 == row.params.h2))
                    flush_config();
                cur = row.params;
                config_sum += row.err[pi];
                ++config_count;
                row_errs.push_back(row.err[pi]);
                if (best_row == rows.size() || row.err[pi] > rows[best_row].err[pi]) best_row = ri;
            }
            flush_config();
            if (row_errs.empty()) continue;
            append_stats(aggregates, regimes[reg], pi + 1, row_errs, "rows");
            append_stats(aggregates, regimes[reg], pi + 1, config_errs, "per-config");
            worst_cases.push_back({regimes[reg], pi + 1, best_row, rows[best_row].err[pi]});
        }
    }
}

std::vector<std::string> params_fields(const ModelParams& p) {
    return {format_g12(p.mu0), format_g12(p.mu1), format_g12(p.mu2),
            format_g12(p.h0),  format_g12(p.h1),  format_g12(p.h2)};
}

}  // namespace

SweepReport run_sweep(const SweepGrid& grid, const SweepOptions& options) {
    if (options.policies.empty()) throw std::invalid_argument("run_sweep: no policies given");
    if (options.states.empty()) throw std::invalid_argument("run_sweep: no start states given");
    int deepest = 0;
    for (const auto& s : options.states) {
        if (!s.in_state_space())
            throw std::invalid_argument("run_sweep: invalid start state " + s.str());
        deepest = std::max(deepest, s.total());
    }
    if (options.n_max < deepest)
        throw std::invalid_argument("run_sweep: n_max " + std::to_string(options.n_max) +
                                    " below deepest start state total " + std::to_string(deepest));

    SweepReport report;
    std::vector<ModelParams> kept;
    for (double mu0 : grid.mu0)
        for (double mu1 : grid.mu1)
            for (double mu2 : grid.mu2)
                for (double h0 : grid.h0)
                    for (double h1 : grid.h1)
                        for (double h2 : grid.h2) {
                            const ModelParams p(mu0, mu1, mu2, h0, h1, h2);
                            const double lhs = p.h1 / p.mu1, rhs = p.h2 / p.mu2;
                            if (lhs == rhs) ++report.equality_dropped;
                            else if (lhs < rhs) ++report.reversed_dropped;
                            else kept.push_back(p);
                        }
    report.configs_kept = kept.size();

    const std::size_t n_states = options.states.size();
    const std::size_t n_policies = options.policies.size();
    report.rows.resize(kept.size() * n_states);

    auto run_config = [&](std::size_t ci) {
        const ModelParams& p = kept[ci];
        const SolveResult opt = solve(p, options.n_max, options.solve_options);
        std::vector<EvalResult> evals;
        evals.reserve(n_policies);
        for (const auto& spec : options.policies) {
            PolicySpec bound = spec;
            if (bound.kind == PolicySpec::Kind::Optimal && bound.reference == nullptr)
                bound.reference = &opt;
            evals.push_back(evaluate_policy(p, bound, options.n_max));
        }
        const auto structures = extract_thresholds(opt);
        const bool all_station1 = std::all_of(structures.begin(), structures.end(),
                                              [](const DecisionStructure& d) {
                                                  return d.threshold.has_value() && *d.threshold == 0;
                                              });
        const bool first_is_always1 =
            options.policies[0].kind == PolicySpec::Kind::AlwaysStation1;
        for (std::size_t si = 0; si < n_states; ++si) {
            SweepRow& row = report.rows[ci * n_states + si];
            row.params = p;
            row.state = options.states[si];
            row.m1_le_m2 = 1.0 / p.mu1 <= 1.0 / p.mu2;
            row.v_opt = opt.value(row.state);
            row.v_policy.resize(n_policies);
            row.err.resize(n_policies);
            for (std::size_t pi = 0; pi < n_policies; ++pi) {
                row.v_policy[pi] = evals[pi].value(row.state);
                row.err[pi] = roundtrip_g12(relative_error(row.v_policy[pi], row.v_opt));
            }
            if (all_station1 && first_is_always1 && row.state.queue0 >= 1) {
                for (std::size_t pi = 1; pi < n_policies; ++pi)
                    if (row.err[0] > row.err[pi] + 1e-12) row.ordering_exception = true;
            }
        }
    };

    unsigned threads = options.threads == 0
                           ? std::max(1u, std::thread::hardware_concurrency())
                           : options.threads;
    threads = std::min<unsigned>(threads, kept.size() == 0 ? 1 : static_cast<unsigned>(kept.size()));
    if (threads <= 1) {
        for (std::size_t ci = 0; ci < kept.size(); ++ci) run_config(ci);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.push_back(std::async(std::launch::async, [&]() {
                for (std::size_t ci = next.fetch_add(1); ci < kept.size(); ci = next.fetch_add(1))
                    run_config(ci);
            }));
        }
        for (auto& w : workers) w.get();
    }

    aggregate_rows(report.rows, n_policies, report.aggregates, report.worst_cases);

    std::size_t exceptions = 0;
    for (const auto& row : report.rows) exceptions += row.ordering_exception ? 1 : 0;
    report.metadata.push_back("configs: kept=" + std::to_string(report.configs_kept) +
                              " equality_dropped=" + std::to_string(report.equality_dropped) +
                              " reversed_dropped=" + std::to_string(report.reversed_dropped));
    std::string states_line = "states:";
    for (const auto& s : options.states) states_line += " " + s.str();
    report.metadata.push_back(states_line);
    std::string policies_line = "policies:";
    for (std::size_t pi = 0; pi < n_policies; ++pi)
        policies_line += " p" + std::to_string(pi + 1) + "=" + options.policies[pi].str();
    report.metadata.push_back(policies_line);
    report.metadata.push_back("n_max: " + std::to_string(options.n_max));
    report.metadata.push_back("tie_break: station " +
                              std::string(to_string(options.solve_options.tie_break)) +
                              ", tie_tol: " + format_g12(options.solve_options.tie_tol));
    report.metadata.push_back(
        "boundary decision (0,1,0,0): threshold rules test the queue length (0); "
        "the blocking rule routes to station 2");
    report.metadata.push_back(
        "aggregation: rows mode treats each (config,state) as one sample; per-config mode "
        "averages the states of a config first; std in sample (n-1) and population variants");
    report.metadata.push_back("ordering_exceptions: " + std::to_string(exceptions));
    return report;
}

std::string sweep_rows_csv(const SweepReport& report) {
    const std::size_t n_policies = report.rows.empty() ? 0 : report.rows[0].err.size();
    std::vector<std::string> head = {"mu0", "mu1", "mu2", "h0", "h1", "h2", "i", "j", "k", "l",
                                     "v_opt"};
    for (std::size_t pi = 1; pi <= n_policies; ++pi) head.push_back("v_p" + std::to_string(pi));
    for (std::size_t pi = 1; pi <= n_policies; ++pi) head.push_back("err_p" + std::to_string(pi));
    std::string out = csv_line(head);
    for (const auto& row : report.rows) {
        std::vector<std::string> fields = params_fields(row.params);
        fields.push_back(std::to_string(row.state.queue0));
        fields.push_back(std::to_string(row.state.station0));
        fields.push_back(std::to_string(row.state.station1));
        fields.push_back(std::to_string(row.state.station2));
        fields.push_back(format_g12(row.v_opt));
        for (double v : row.v_policy) fields.push_back(format_g12(v));
        for (double e : row.err) fields.push_back(format_g12(e));
        out += csv_line(fields);
    }
    return out;
}

namespace {

std::string aggregates_csv_impl(const std::vector<SweepAggregate>& aggregates) {
    std::string out = "regime,policy,max,mean,std,mode\n";
    for (const auto& a : aggregates) {
        out += csv_line({a.regime, "p" + std::to_string(a.policy), format_g12(a.max),
                         format_g12(a.mean), format_g12(a.sd), a.mode});
    }
    return out;
}

}  // namespace

std::string sweep_aggregates_csv(const SweepReport& report) {
    return aggregates_csv_impl(report.aggregates);
}

std::string sweep_worstcases_text(const SweepReport& report) {
    std::string out;
    for (const auto& w : report.worst_cases) {
        const SweepRow& row = report.rows[w.row_index];
        out += "regime " + w.regime + " policy p" + std::to_string(w.policy) + ": err=" +
               format_g12(w.err) + " at mu0=" + format_g12(row.params.mu0) +
               " mu1=" + format_g12(row.params.mu1) + " mu2=" + format_g12(row.params.mu2) +
               " h0=" + format_g12(row.params.h0) + " h1=" + format_g12(row.params.h1) +
               " h2=" + format_g12(row.params.h2) + " state " + row.state.str() + "\n";
    }
    return out;
}

std::string aggregates_csv_from_rows_csv(const std::string& rows_csv) {
    std::vector<SweepRow> rows;
    std::size_t pos = 0, n_policies = 0;
    bool header = true;
    while (pos < rows_csv.size()) {
        std::size_t end = rows_csv.find('\n', pos);
        if (end == std::string::npos) end = rows_csv.size();
        const std::string line = rows_csv.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        const auto fields = csv_split(line);
        if (header) {
            header = false;
            n_policies = (fields.size() - 11) / 2;
            continue;
        }
        SweepRow row;
        row.params = ModelParams(std::stod(fields[0]), std::stod(fields[1]), std::stod(fields[2]),
                                 std::stod(fields[3]), std::stod(fields[4]), std::stod(fields[5]));
        row.state = SystemState(std::stoi(fields[6]), std::stoi(fields[7]), std::stoi(fields[8]),
                                std::stoi(fields[9]));
        row.v_opt = std::stod(fields[10]);
        row.m1_le_m2 = 1.0 / row.params.mu1 <= 1.0 / row.params.mu2;
        for (std::size_t pi = 0; pi < n_policies; ++pi) {
            row.v_policy.push_back(std::stod(fields[11 + pi]));
            row.err.push_back(std::stod(fields[11 + n_policies + pi]));
        }
        rows.push_back(std::move(row));
    }
    std::vector<SweepAggregate> aggregates;
    std::vector<SweepWorstCase> worst;
    aggregate_rows(rows, n_policies, aggregates, worst);
    return aggregates_csv_impl(aggregates);
}

}  // namespace tqclear
