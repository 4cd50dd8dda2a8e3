// Command-line front end: solve | evaluate | sweep | structure | verify |
// simulate. Model parameters come from a [model] section of the config file;
// every command writes its outputs under --out and is a pure function of
// (config, flags, seed).
//
// Exit codes: 0 ok, 1 usage, 2 computation/verification failure, 3 I/O.

#include <CLI11.hpp>

#include <iostream>

#include "tqclear/bounds.hpp"
#include "tqclear/config.hpp"
#include "tqclear/evaluate.hpp"
#include "tqclear/exact.hpp"
#include "tqclear/simulate.hpp"
#include "tqclear/structure.hpp"
#include "tqclear/sweep.hpp"
#include "tqclear/textio.hpp"

namespace {

using namespace tqclear;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitIo = 3;

struct GlobalArgs {
    std::string config_path;
    std::string out_dir = ".";
    int n_max = 0;  // 0 = take from config or default
    int tie_break = 0;
    double tie_tol = -1.0;
    bool quiet = false;
};

struct Context {
    GlobalArgs args;
    RunConfig config;

    ModelParams params() const {
        if (!config.model.has_value())
            throw UsageError("no model parameters: provide --config with a [model] section");
        return *config.model;
    }

    int n_max(int fallback) const {
        if (args.n_max > 0) return args.n_max;
        if (config.n_max.has_value()) return *config.n_max;
        return fallback;
    }

    SolveOptions solve_options() const {
        SolveOptions o;
        const int tb = args.tie_break > 0 ? args.tie_break : config.tie_break.value_or(2);
        o.tie_break = tb == 1 ? Action::Station1 : Action::Station2;
        if (args.tie_tol >= 0.0) o.tie_tol = args.tie_tol;
        else if (config.tie_tol.has_value()) o.tie_tol = *config.tie_tol;
        return o;
    }

    std::string path(const std::string& name) const { return args.out_dir + "/" + name; }

    void note(const std::string& line) const {
        if (!args.quiet) std::cout << line << "\n";
    }
};

std::string state_fields_header() { return "i,j,k,l"; }

std::vector<std::string> state_fields(const SystemState& s) {
    return {std::to_string(s.queue0), std::to_string(s.station0), std::to_string(s.station1),
            std::to_string(s.station2)};
}

int cmd_solve(const Context& ctx) {
    const SolveResult r = solve(ctx.params(), ctx.n_max(50), ctx.solve_options());
    std::string values = state_fields_header() + ",value\n";
    std::string actions = state_fields_header() + ",action,decision_diff,tie\n";
    for (const auto& s : r.space().states()) {
        auto fields = state_fields(s);
        fields.push_back(format_g12(r.value(s)));
        values += csv_line(fields);
        if (s.is_decision_state()) {
            auto afields = state_fields(s);
            afields.push_back(to_string(r.action(s)));
            afields.push_back(format_g12(decision_diff(r, s)));
            afields.push_back(r.tie(s) ? "1" : "0");
            actions += csv_line(afields);
        }
    }
    write_text_file(ctx.path("values.csv"), values);
    write_text_file(ctx.path("actions.csv"), actions);
    ctx.note("wrote " + ctx.path("values.csv") + " and " + ctx.path("actions.csv") + " (" +
             std::to_string(r.space().size()) + " states)");
    return kExitOk;
}

int cmd_evaluate(const Context& ctx, const std::string& policy_flag) {
    const std::string spec_text =
        !policy_flag.empty() ? policy_flag
                             : ctx.config.policy.value_or(std::string{});
    if (spec_text.empty())
        throw UsageError("evaluate: no policy given (use --policy or a [policy] section)");
    PolicySpec spec;
    try {
        spec = parse_policy(spec_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const int n_max = ctx.n_max(50);
    const SolveResult opt = solve(ctx.params(), n_max, ctx.solve_options());
    if (spec.kind == PolicySpec::Kind::Optimal) spec.reference = &opt;
    const EvalResult ev = evaluate_policy(ctx.params(), spec, n_max);
    std::string out = state_fields_header() + ",v_policy,v_opt,rel_err\n";
    for (const auto& s : ev.space().states()) {
        auto fields = state_fields(s);
        fields.push_back(format_g12(ev.value(s)));
        fields.push_back(format_g12(opt.value(s)));
        fields.push_back(s.is_terminal() ? "" : format_g12(relative_error(ev.value(s), opt.value(s))));
        out += csv_line(fields);
    }
    write_text_file(ctx.path("policy_values.csv"), out);
    ctx.note("wrote " + ctx.path("policy_values.csv") + " for policy " + spec.str());
    return kExitOk;
}

int cmd_sweep(const Context& ctx, unsigned threads_flag) {
    SweepOptions options;
    options.n_max = ctx.args.n_max > 0 ? ctx.args.n_max : ctx.config.sweep_n_max.value_or(22);
    options.solve_options = ctx.solve_options();
    if (ctx.config.sweep_states.has_value()) options.states = *ctx.config.sweep_states;
    if (threads_flag > 0) options.threads = threads_flag;
    else if (ctx.config.sweep_threads.has_value()) options.threads = *ctx.config.sweep_threads;

    const SweepReport report = run_sweep(SweepGrid::study_defaults(), options);
    write_text_file(ctx.path("rows.csv"), sweep_rows_csv(report));
    write_text_file(ctx.path("aggregates.csv"), sweep_aggregates_csv(report));
    std::string worst = sweep_worstcases_text(report);
    worst += "\nmetadata\n";
    for (const auto& line : report.metadata) worst += "  " + line + "\n";
    write_text_file(ctx.path("worstcases.txt"), worst);
    ctx.note("wrote rows.csv, aggregates.csv, worstcases.txt (" +
             std::to_string(report.rows.size()) + " rows, " +
             std::to_string(report.configs_kept) + " configs)");
    return kExitOk;
}

int cmd_structure(const Context& ctx) {
    const ModelParams p = ctx.params();
    const SolveResult r = solve(p, ctx.n_max(120), ctx.solve_options());
    const RegimeClassification cls = classify(p);
    const BoundConstants b = bound_constants(p);

    std::string out;
    out += "model: mu0=" + format_g12(p.mu0) + " mu1=" + format_g12(p.mu1) +
           " mu2=" + format_g12(p.mu2) + " h0=" + format_g12(p.h0) + " h1=" + format_g12(p.h1) +
           " h2=" + format_g12(p.h2) + "\n";
    out += std::string("regime: ") + to_string(cls.regime) + "\n";
    out += std::string("cost order: ") + to_string(cls.cost_order) + "\n";
    out += std::string("m1*h1 <= 2*m2*h2: ") + (cls.station1_within_double_cost ? "yes" : "no") +
           "\n";
    if (cls.mu0_limit.has_value())
        out += "mu0 limit: " + format_g12(*cls.mu0_limit) + " (mu0 " +
               (*cls.mu0_below_limit ? "below" : "not below") + ")\n";
    out += "constants: c1=" + format_g12(b.c1) + " c2=" + format_g12(b.c2) +
           " c3=" + format_g12(b.c3) + " c4=" + format_g12(b.c4) + "\n";
    out += "queue cutoffs: at (i,1,0,1) " + format_g12(b.queue_cutoff_101);
    if (b.queue_cutoff_200.has_value()) out += ", at (i,2,0,0) " + format_g12(*b.queue_cutoff_200);
    out += "\n";
    out += "tilde constants: " + format_g12(b.ct1) + " " + format_g12(b.ct2) + " " +
           format_g12(b.ct3) + ", mu0 limit " + format_g12(b.mu0_limit) + "\n\n";

    out += "decision structures (n_max=" + std::to_string(r.n_max()) + "):\n";
    for (const auto& ds : extract_thresholds(r)) out += "  " + ds.str() + "\n";
    out += "\n";
    out += format_certificates(certify_all(r));
    write_text_file(ctx.path("structure.txt"), out);
    ctx.note("wrote " + ctx.path("structure.txt"));
    return kExitOk;
}

int cmd_verify(const Context& ctx, const std::string& perturb_flag) {
    const ModelParams p = ctx.params();
    SolveResult r = solve(p, ctx.n_max(50), ctx.solve_options());
    if (!perturb_flag.empty()) {
        // Test hook: damage one stored value to prove the checks notice.
        const auto comma = perturb_flag.rfind(',');
        if (comma == std::string::npos) throw UsageError("--perturb expects i,j,k,l,delta");
        const SystemState s = parse_state(perturb_flag.substr(0, comma));
        const double delta = std::strtod(perturb_flag.c_str() + comma + 1, nullptr);
        std::vector<double> values = r.values_by_rank();
        values[r.space().index_of(s)] += delta;
        std::vector<Action> actions;
        std::vector<std::uint8_t> ties;
        for (const auto& st : r.space().states()) {
            actions.push_back(st.is_decision_state() ? r.action(st) : Action::Station1);
            ties.push_back(st.is_decision_state() && r.tie(st) ? 1 : 0);
        }
        r = SolveResult(p, StateSpace(r.n_max()), r.options(), std::move(values),
                        std::move(actions), std::move(ties));
    }

    bool failed = false;
    std::string out;
    const double residual = check_residuals(r);
    out += "optimality residual: " + format_g12(residual) + " (tolerance 1e-09)\n\n";
    if (residual > 1e-9) failed = true;

    const auto certs = certify_all(r);
    out += format_certificates(certs);
    for (const auto& c : certs) failed = failed || !c.ok();

    const auto checks = verify_all_bounds(r);
    out += format_bounds(checks);
    for (const auto& c : checks) failed = failed || c.status == CheckStatus::Fail;

    out += failed ? "RESULT: FAIL\n" : "RESULT: OK\n";
    write_text_file(ctx.path("verify.txt"), out);
    write_text_file(ctx.path("checks.csv"), bounds_csv(checks));
    ctx.note("wrote verify.txt and checks.csv; " + std::string(failed ? "FAIL" : "OK"));
    return failed ? kExitComputation : kExitOk;
}

int cmd_simulate(const Context& ctx, std::uint64_t episodes_flag, std::int64_t seed_flag,
                 const std::string& start_flag, const std::string& policy_flag,
                 const std::string& episode_csv) {
    SimConfig config;
    config.params = ctx.params();
    config.episodes = episodes_flag > 0 ? episodes_flag : ctx.config.episodes.value_or(10000);
    config.seed = seed_flag >= 0 ? static_cast<std::uint64_t>(seed_flag)
                                 : ctx.config.seed.value_or(0);
    if (!start_flag.empty()) config.start = parse_state(start_flag);
    else if (ctx.config.sim_start.has_value()) config.start = *ctx.config.sim_start;
    else throw UsageError("simulate: no start state (use --start i,j,k,l)");

    const std::string spec_text = !policy_flag.empty()
                                      ? policy_flag
                                      : ctx.config.sim_policy.value_or(
                                            ctx.config.policy.value_or(std::string{}));
    if (spec_text.empty()) throw UsageError("simulate: no policy given");
    PolicySpec spec;
    try {
        spec = parse_policy(spec_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::optional<SolveResult> opt;
    if (spec.kind == PolicySpec::Kind::Optimal) {
        opt = solve(config.params, ctx.n_max(std::max(2, config.start.total())),
                    ctx.solve_options());
        spec.reference = &*opt;
    }
    config.policy = spec;

    SimEstimate est;
    if (!episode_csv.empty()) {
        std::string trace;
        est = estimate_with_trace(config, trace);
        write_text_file(episode_csv, trace);
    } else {
        est = estimate(config);
    }
    std::cout << "mean=" << format_g12(est.mean) << " sd=" << format_g12(est.sd)
              << " se=" << format_g12(est.se) << " episodes=" << est.episodes
              << " seed=" << est.seed << " rng=" << est.rng << " policy=" << spec.str()
              << " start=" << config.start.str() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver, policy evaluation, structural verification and simulation\n"
                 "for a two-server two-stage tandem clearing system with holding costs."};
    app.require_subcommand(1);

    GlobalArgs args;
    app.add_option("--config", args.config_path, "key = value config file with a [model] section");
    app.add_option("--out", args.out_dir, "output directory (default: current)");
    app.add_option("--n-max", args.n_max, "job budget override (default: solve/structure 50/120, sweep 22)");
    app.add_option("--tie-break", args.tie_break, "station favored on ties, 1 or 2 (default 2)")
        ->check(CLI::IsMember({1, 2}));
    app.add_option("--tie-tol", args.tie_tol, "relative tie tolerance (default 1e-9)");
    app.add_flag("--quiet", args.quiet, "suppress progress notes");

    auto* sc_solve = app.add_subcommand("solve", "write values.csv and actions.csv");
    auto* sc_eval = app.add_subcommand("evaluate", "cost of a fixed policy vs optimal");
    std::string eval_policy;
    sc_eval->add_option("--policy", eval_policy,
                        "optimal | always1 | always2 | threshold:T | blocking | custom:N,N,N");
    auto* sc_sweep = app.add_subcommand("sweep", "study grid: rows.csv, aggregates.csv, worstcases.txt");
    unsigned sweep_threads = 0;
    sc_sweep->add_option("--threads", sweep_threads, "worker threads (default: hardware)");
    auto* sc_structure = app.add_subcommand("structure", "regimes, constants, decision structures");
    auto* sc_verify = app.add_subcommand("verify", "certificates and inequality checks");
    std::string perturb;
    sc_verify->add_option("--perturb", perturb, "test hook: i,j,k,l,delta value corruption")
        ->group("");
    auto* sc_sim = app.add_subcommand("simulate", "seeded Monte Carlo estimate of a policy cost");
    std::uint64_t episodes = 0;
    std::int64_t seed = -1;
    std::string start, sim_policy, episode_csv;
    sc_sim->add_option("--episodes", episodes, "episode count (default 10000)");
    sc_sim->add_option("--seed", seed, "RNG seed (default 0)");
    sc_sim->add_option("--start", start, "start state i,j,k,l");
    sc_sim->add_option("--policy", sim_policy, "policy spec");
    sc_sim->add_option("--episode-csv", episode_csv, "also write one CSV row per episode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Context ctx;
        ctx.args = args;
        if (!args.config_path.empty()) ctx.config = parse_run_config(read_text_file(args.config_path));
        if (sc_solve->parsed()) return cmd_solve(ctx);
        if (sc_eval->parsed()) return cmd_evaluate(ctx, eval_policy);
        if (sc_sweep->parsed()) return cmd_sweep(ctx, sweep_threads);
        if (sc_structure->parsed()) return cmd_structure(ctx);
        if (sc_verify->parsed()) return cmd_verify(ctx, perturb);
        if (sc_sim->parsed())
            return cmd_simulate(ctx, episodes, seed, start, sim_policy, episode_csv);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
