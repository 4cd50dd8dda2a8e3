#include "tqclear/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tqclear/structure.hpp"
#include "tqclear/textio.hpp"

namespace tqclear {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

constexpr SystemState kOneJob[3] = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};

class CheckBuilder {
public:
    CheckBuilder(std::string id, std::string hypothesis, std::string range)
        : check_{std::move(id), std::move(hypothesis), std::move(range), CheckStatus::Skipped,
                 std::numeric_limits<double>::infinity(), SystemState{}} {}

    void consider(double margin, const SystemState& witness) {
        seen_ = true;
        if (margin < check_.worst_margin) {
            check_.worst_margin = margin;
            check_.witness = witness;
        }
    }

    InequalityCheck skipped(const std::string& reason) {
        check_.status = CheckStatus::Skipped;
        check_.hypothesis = reason;
        check_.worst_margin = 0.0;
        return check_;
    }

    InequalityCheck finish() {
        if (!seen_) return skipped(check_.hypothesis + "; empty range at this n_max");
        check_.status = check_.worst_margin >= -kMarginTol ? CheckStatus::Pass : CheckStatus::Fail;
        return check_;
    }

private:
    InequalityCheck check_;
    bool seen_ = false;
};

std::string irange(long long lo, long long hi) {
    return "i in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

// All two-job states with a given minimum number in Station-0 service.
template <class Fn>
void each_two_job(const SolveResult& r, long long imax, int min_station0, Fn fn) {
    static const SystemState layouts[6] = {{0, 0, 0, 2}, {0, 0, 1, 1}, {0, 0, 2, 0},
                                           {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 2, 0, 0}};
    for (const auto& layout : layouts) {
        if (layout.station0 < min_station0) continue;
        for (long long i = 0; i <= imax; ++i)
            fn(SystemState{static_cast<int>(i), layout.station0, layout.station1, layout.station2});
    }
}

}  // namespace

std::vector<InequalityCheck> verify_value_bounds(const SolveResult& r) {
    const ModelParams& p = r.params();
    const double floor1 = p.h1 / p.mu1;
    const double floor2 = p.h2 / p.mu2;
    const double cheaper = std::min(floor1, floor2);
    const double queue_step = p.h0 / p.mu0 + cheaper;
    const long long imax = r.n_max() - 2;   // deepest two-job queue
    const long long igrow = r.n_max() - 3;  // deepest source when the target holds one more job

    std::vector<InequalityCheck> out;
    auto value = [&r](int i, int j, int k, int l) {
        return r.value({i, j, k, l});
    };

    {
        CheckBuilder b("one-job-add-station1", "always", "one-job bases");
        for (const auto& s : kOneJob)
            b.consider(value(0, s.station0, s.station1 + 1, s.station2) - r.value(s) - floor1, s);
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("one-job-add-station2", "always", "one-job bases");
        for (const auto& s : kOneJob)
            b.consider(value(0, s.station0, s.station1, s.station2 + 1) - r.value(s) - floor2, s);
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("one-job-add-station0", "always", "one-job bases");
        for (const auto& s : kOneJob)
            b.consider(value(0, s.station0 + 1, s.station1, s.station2) - r.value(s) - queue_step, s);
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("queue-growth", "always", irange(0, igrow));
        each_two_job(r, igrow, 0, [&](const SystemState& s) {
            b.consider(value(s.queue0 + 1, s.station0, s.station1, s.station2) - r.value(s) -
                           queue_step,
                       s);
        });
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("handoff-station1", "always", irange(0, igrow));
        each_two_job(r, igrow, 1, [&](const SystemState& s) {
            b.consider(value(s.queue0 + 1, s.station0 - 1, s.station1 + 1, s.station2) - r.value(s) -
                           cheaper,
                       s);
        });
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("handoff-station2", "always", irange(0, igrow));
        each_two_job(r, igrow, 1, [&](const SystemState& s) {
            b.consider(value(s.queue0 + 1, s.station0 - 1, s.station1, s.station2 + 1) - r.value(s) -
                           cheaper,
                       s);
        });
        out.push_back(b.finish());
    }
    // Rate-ordered families.
    const bool faster1 = p.mu1 >= p.mu2;
    {
        CheckBuilder b("decision-gap-upper", "mu1 >= mu2", irange(0, imax));
        if (!faster1) out.push_back(b.skipped("requires mu1 >= mu2"));
        else {
            each_two_job(r, imax, 1, [&](const SystemState& s) {
                b.consider(floor1 - floor2 - decision_diff(r, s), s);
            });
            out.push_back(b.finish());
        }
    }
    {
        CheckBuilder b("station2-handoff-floor", "mu1 >= mu2", irange(0, igrow));
        if (!faster1) out.push_back(b.skipped("requires mu1 >= mu2"));
        else {
            each_two_job(r, igrow, 1, [&](const SystemState& s) {
                b.consider(value(s.queue0 + 1, s.station0 - 1, s.station1, s.station2 + 1) -
                               r.value(s) - floor2,
                           s);
            });
            out.push_back(b.finish());
        }
    }
    const bool faster2 = p.mu2 > p.mu1;
    const bool ordered = p.station2_preferred();
    const char* slow_hyp = "mu2 > mu1 and h1/mu1 >= h2/mu2";
    {
        CheckBuilder b("blocked-decision-gap-upper", slow_hyp, irange(0, imax));
        if (!faster2 || !ordered) out.push_back(b.skipped(std::string("requires ") + slow_hyp));
        else {
            each_two_job(r, imax, 1, [&](const SystemState& s) {
                const double occ = s.station2 + 1;
                const double bound = floor1 - occ * p.h2 / p.mu2 +
                                     (s.queue0 + s.station0 - 1) * p.h0 / 2.0 *
                                         (1.0 / p.mu1 - occ / p.mu2);
                b.consider(bound - decision_diff(r, s), s);
            });
            out.push_back(b.finish());
        }
    }
    {
        CheckBuilder b("blocked-refill-upper", slow_hyp, irange(0, igrow));
        if (!faster2 || !ordered) out.push_back(b.skipped(std::string("requires ") + slow_hyp));
        else {
            for (long long i = 0; i <= igrow; ++i) {
                const SystemState s{static_cast<int>(i), 2, 0, 0};
                const double bound =
                    floor1 + (i + 2) * p.h0 / 2.0 * (1.0 / p.mu1 - 1.0 / p.mu0);
                b.consider(bound - (value(i + 1, 0, 1, 1) - r.value(s)), s);
            }
            out.push_back(b.finish());
        }
    }
    return out;
}

std::vector<InequalityCheck> verify_equal_rate_bounds(const SolveResult& r) {
    const ModelParams& p = r.params();
    const bool equal = p.mu1 == p.mu2;
    const long long imax = r.n_max() - 2;
    std::vector<InequalityCheck> out;
    auto value = [&r](int i, int j, int k, int l) {
        return r.value({i, j, k, l});
    };
    {
        CheckBuilder b("equal-rates-boundary-exchange", "mu1 == mu2", "single boundary identity");
        if (!equal) out.push_back(b.skipped("requires mu1 == mu2"));
        else {
            b.consider(value(0, 0, 1, 0) - value(0, 0, 0, 1) - value(0, 1, 1, 0) + value(0, 1, 0, 1),
                       {0, 1, 0, 0});
            out.push_back(b.finish());
        }
    }
    {
        CheckBuilder b("equal-rates-blocked-exchange", "mu1 == mu2 and h1/mu1 >= h2/mu2",
                       irange(0, imax));
        if (!equal || !p.station2_preferred())
            out.push_back(b.skipped("requires mu1 == mu2 and h1/mu1 >= h2/mu2"));
        else {
            for (long long i = 0; i <= imax; ++i) {
                const double lhs = value(i, 1, 1, 0) - value(i, 1, 0, 1) - value(i, 0, 1, 1) +
                                   value(i, 0, 0, 2);
                b.consider((2.0 * p.h2 + i * p.h0) / p.mu1 - lhs,
                           {static_cast<int>(i), 1, 1, 0});
            }
            out.push_back(b.finish());
        }
    }
    return out;
}

std::vector<InequalityCheck> verify_all_bounds(const SolveResult& r) {
    std::vector<InequalityCheck> out = verify_value_bounds(r);
    for (auto& c : verify_equal_rate_bounds(r)) out.push_back(std::move(c));
    return out;
}

std::string bounds_csv(const std::vector<InequalityCheck>& checks) {
    std::string out = "check_id,status,worst_margin,witness_i,witness_j,witness_k,witness_l,range\n";
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Skipped) {
            out += csv_line({c.id, "skipped (hypothesis)", "", "", "", "", "", c.hypothesis});
            continue;
        }
        out += csv_line({c.id, to_string(c.status), format_g12(c.worst_margin),
                         std::to_string(c.witness.queue0), std::to_string(c.witness.station0),
                         std::to_string(c.witness.station1), std::to_string(c.witness.station2),
                         c.range});
    }
    return out;
}

std::string format_bounds(const std::vector<InequalityCheck>& checks) {
    std::string out;
    for (const auto& c : checks) {
        out += "[" + c.id + "]\n";
        if (c.status == CheckStatus::Skipped) {
            out += "status: skipped (" + c.hypothesis + ")\n\n";
            continue;
        }
        out += std::string("status: ") + to_string(c.status) + "\n";
        out += "hypothesis: " + c.hypothesis + "\n";
        out += "range: " + c.range + "\n";
        out += "worst_margin: " + format_g12(c.worst_margin) + " at " + c.witness.str() + "\n\n";
    }
    return out;
}

}  // namespace tqclear
