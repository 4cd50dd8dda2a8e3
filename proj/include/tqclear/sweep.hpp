#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tqclear/evaluate.hpp"

namespace tqclear {

/// Cartesian parameter grid for the heuristic-vs-optimal study.
struct SweepGrid {
    std::vector<double> mu0, mu1, mu2, h0, h1, h2;

    /// The study grid: mu0 in {1,2,5,10,20,30,40}, mu1=10,
    /// mu2 in {4,6,8,12,15,25}, h0 in {0.01,0.05,0.1,0.5,1}, h1=1,
    /// h2 in {0.2,0.5,1,1.5,2}; holding costs are scale-free so h1 and mu1
    /// are pinned.
    static SweepGrid study_defaults();

    std::size_t combinations() const {
        return mu0.size() * mu1.size() * mu2.size() * h0.size() * h1.size() * h2.size();
    }
};

struct SweepOptions {
    std::vector<SystemState> states{{20, 2, 0, 0}, {20, 1, 1, 0}, {20, 1, 0, 1}};
    std::vector<PolicySpec> policies{PolicySpec::always_station1(), PolicySpec::threshold(10),
                                     PolicySpec::threshold(15), PolicySpec::always_station2(),
                                     PolicySpec::blocking_aware()};
    int n_max = 22;
    SolveOptions solve_options{};
    /// Worker threads; 1 forces the serial path. Scheduling never changes
    /// the report.
    unsigned threads = 0;
};

/// One (configuration, start state) record. Stored errors are the values a
/// reader of the CSV output sees (12 significant digits), so aggregates
/// recomputed from the file match the emitted ones bit for bit.
struct SweepRow {
    ModelParams params;
    SystemState state;
    double v_opt = 0.0;
    std::vector<double> v_policy;
    std::vector<double> err;
    bool m1_le_m2 = false;
    /// Set when the always-Station-1 heuristic is not the best heuristic on
    /// this row even though the optimal policy routes to Station 1 at every
    /// two-job decision state of this configuration.
    bool ordering_exception = false;
};

struct SweepAggregate {
    std::string regime;  ///< "m1<=m2" or "m1>m2"
    std::size_t policy;  ///< 1-based position in the policy list
    double max = 0.0, mean = 0.0, sd = 0.0;
    std::size_t count = 0;
    std::string mode;  ///< rows-sample | rows-population | per-config-sample | per-config-population
};

struct SweepWorstCase {
    std::string regime;
    std::size_t policy;     ///< 1-based
    std::size_t row_index;  ///< into SweepReport::rows
    double err = 0.0;
};

struct SweepReport {
    std::vector<SweepRow> rows;  ///< grid order, states innermost
    std::vector<SweepAggregate> aggregates;
    std::vector<SweepWorstCase> worst_cases;
    std::vector<std::string> metadata;
    std::size_t configs_kept = 0;
    std::size_t equality_dropped = 0;   ///< h1/mu1 == h2/mu2 exactly
    std::size_t reversed_dropped = 0;   ///< h1/mu1 < h2/mu2
};

/// Solves every grid configuration with a strict h1/mu1 > h2/mu2 filter and
/// evaluates each policy at each start state. Deterministic output for any
/// thread count.
SweepReport run_sweep(const SweepGrid& grid, const SweepOptions& options = {});

/// CSV: mu0,mu1,mu2,h0,h1,h2,i,j,k,l,v_opt,v_p1..,err_p1.. (12 significant
/// digits).
std::string sweep_rows_csv(const SweepReport& report);

/// CSV: regime,policy,max,mean,std,mode.
std::string sweep_aggregates_csv(const SweepReport& report);

/// Per regime and policy, the configuration and state attaining the largest
/// relative error.
std::string sweep_worstcases_text(const SweepReport& report);

/// Recomputes the aggregate CSV from a rows CSV (the round-trip contract:
/// equals sweep_aggregates_csv of the report the rows came from, byte for
/// byte).
std::string aggregates_csv_from_rows_csv(const std::string& rows_csv);

}  // namespace tqclear
