#include "tqclear/structure.hpp"

#include <algorithm>
#include <cmath>

#include "tqclear/textio.hpp"

namespace tqclear {

const char* to_string(RateRegime r) {
    switch (r) {
        case RateRegime::M1LessThanM2: return "m1 < m2";
        case RateRegime::RatesEqual: return "m1 = m2";
        case RateRegime::M1WithinTwiceM2: return "m2 < m1 <= 2*m2";
        case RateRegime::M1BeyondTwiceM2: return "m1 > 2*m2";
    }
    return "?";
}

const char* to_string(CostOrder c) {
    switch (c) {
        case CostOrder::StrictlyStation2: return "h1/mu1 > h2/mu2";
        case CostOrder::Equal: return "h1/mu1 = h2/mu2";
        case CostOrder::Reversed: return "h1/mu1 < h2/mu2";
    }
    return "?";
}

const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "certified";
        case CertStatus::Inconclusive: return "inconclusive";
        case CertStatus::Violated: return "violated";
        case CertStatus::NotApplicable: return "not applicable";
    }
    return "?";
}

RegimeClassification classify(const ModelParams& params) {
    params.validate();
    const double m1 = 1.0 / params.mu1;
    const double m2 = 1.0 / params.mu2;
    RegimeClassification out{};
    if (m1 < m2) out.regime = RateRegime::M1LessThanM2;
    else if (m1 == m2) out.regime = RateRegime::RatesEqual;
    else if (m1 <= 2.0 * m2) out.regime = RateRegime::M1WithinTwiceM2;
    else out.regime = RateRegime::M1BeyondTwiceM2;

    const double lhs = params.h1 / params.mu1;
    const double rhs = params.h2 / params.mu2;
    out.cost_order = lhs > rhs   ? CostOrder::StrictlyStation2
                     : lhs == rhs ? CostOrder::Equal
                                  : CostOrder::Reversed;
    out.station1_within_double_cost = lhs <= 2.0 * rhs;
    if (out.regime == RateRegime::M1BeyondTwiceM2) {
        out.mu0_limit = bound_constants(params).mu0_limit;
        out.mu0_below_limit = params.mu0 < *out.mu0_limit;
    }
    return out;
}

BoundConstants bound_constants(const ModelParams& p) {
    p.validate();
    BoundConstants b;
    const double pref_gap = p.h1 / p.mu1 - p.h2 / p.mu2;
    b.c1 = (p.mu2 * p.h1 - (2.0 * p.mu1 + p.mu2) * p.h2) / (p.mu2 * (p.mu1 + p.mu2)) +
           p.mu2 / (p.mu1 + p.mu2) * pref_gap;
    b.c2 = (p.mu2 * p.h1 - p.mu1 * p.h2) / (p.mu1 * (p.mu1 + p.mu2)) +
           p.mu1 / (p.mu1 + p.mu2) * pref_gap;
    b.c3 = p.mu0 / (p.mu0 + p.mu1) * b.c2 + p.mu1 / (p.mu0 + p.mu1) * pref_gap;
    b.c4 = p.mu0 / (p.mu0 + p.mu1) * b.c1 + p.mu1 / (p.mu0 + p.mu1) * pref_gap;
    b.queue_cutoff_101 = b.c1 * p.mu2 * (p.mu1 + p.mu2) / (p.mu1 * p.h0);
    {
        const double from_c4 = p.mu2 * (p.mu0 + p.mu1) * (p.mu1 + p.mu2) * b.c4 / (p.mu0 * p.mu1 * p.h0);
        if (p.mu1 == p.mu2) {
            b.queue_cutoff_200 = from_c4;
        } else {
            const double from_c3 = 2.0 * p.mu1 * (p.mu0 + p.mu1) * (p.mu1 + p.mu2) * b.c3 /
                                   (p.mu0 * (p.mu1 - p.mu2) * p.h0);
            b.queue_cutoff_200 = std::max(from_c3, from_c4);
        }
    }
    b.ct1 = (p.h1 + p.h2 - p.h0) / (p.mu1 + p.mu2);
    b.ct2 = p.mu0 * (p.mu2 - p.mu1) / ((p.mu0 + p.mu2) * (p.mu0 + p.mu1)) * b.ct1 +
            (p.mu0 * (p.h1 - p.h2) + (p.mu2 * p.h1 - p.mu1 * p.h2)) /
                ((p.mu0 + p.mu2) * (p.mu0 + p.mu1));
    b.ct3 = p.mu2 / (p.mu1 + p.mu2) * b.ct2 +
            (p.mu2 * p.h1 - (2.0 * p.mu1 + p.mu2) * p.h2) / (p.mu2 * (p.mu1 + p.mu2));
    const double ratio = p.mu2 / p.mu1;
    b.mu0_limit = p.mu1 / 2.0 * (ratio - 2.0) * (ratio + 1.0);
    return b;
}

namespace {

constexpr SystemState kLayout200{0, 2, 0, 0};
constexpr SystemState kLayout110{0, 1, 1, 0};
constexpr SystemState kLayout101{0, 1, 0, 1};

SystemState at_queue(const SystemState& layout, long long i) {
    return {static_cast<int>(i), layout.station0, layout.station1, layout.station2};
}

double gap(const SolveResult& r, const SystemState& layout, long long i) {
    return decision_diff(r, at_queue(layout, i));
}

// Smallest i such that pred holds for every queue length in [i, imax];
// nullopt when it fails even at imax.
template <class Pred>
std::optional<long long> stable_tail(long long imax, Pred pred) {
    if (imax < 0) return std::nullopt;
    long long i = imax;
    if (!pred(i)) return std::nullopt;
    while (i > 0 && pred(i - 1)) --i;
    return i;
}

std::string range_str(long long imax) { return "i in [0, " + std::to_string(imax) + "]"; }

Certificate not_applicable(std::string id, std::string why) {
    return Certificate{std::move(id), CertStatus::NotApplicable, std::move(why), std::nullopt};
}

// "pred holds for all i in [lo, imax]" claims; violation pinpoints a witness.
template <class Pred>
Certificate for_all(std::string id, long long lo, long long imax, std::string what, Pred pred) {
    Certificate cert{std::move(id), CertStatus::Certified, "", std::nullopt};
    if (imax < lo) {
        cert.status = CertStatus::Inconclusive;
        cert.detail = "no states to check: range empty at this n_max";
        return cert;
    }
    for (long long i = lo; i <= imax; ++i) {
        if (!pred(i)) {
            cert.status = CertStatus::Violated;
            cert.detail = what + " fails at i=" + std::to_string(i);
            return cert;
        }
    }
    cert.detail = what + " holds for " +
                  (lo == 0 ? range_str(imax)
                           : "i in [" + std::to_string(lo) + ", " + std::to_string(imax) + "]");
    return cert;
}

template <class Pred>
Certificate tail_claim(std::string id, long long imax, std::string what, Pred pred) {
    Certificate cert{std::move(id), CertStatus::Certified, "", std::nullopt};
    const auto from = stable_tail(imax, pred);
    if (!from.has_value()) {
        cert.status = CertStatus::Inconclusive;
        cert.detail = what + " has not stabilized by i=" + std::to_string(imax) +
                      "; solve with a larger n_max to observe the tail";
        return cert;
    }
    cert.stable_from = *from;
    cert.detail = what + " for all i >= " + std::to_string(*from) + " (checked up to " +
                  std::to_string(imax) + ")";
    return cert;
}

}  // namespace

std::vector<Certificate> certify_rate_ordering(const SolveResult& r) {
    const ModelParams& p = r.params();
    const RegimeClassification cls = classify(p);
    const long long imax = r.n_max() - 2;
    std::vector<Certificate> out;

    const std::string a2_why = "requires the cost-to-serve ordering h1/mu1 >= h2/mu2; instance has " +
                               std::string(to_string(cls.cost_order));
    const bool a2 = cls.station2_preferred();

    auto station1_ok = [&](const SystemState& layout) {
        return [&r, layout](long long i) { return gap(r, layout, i) <= kMarginTol; };
    };
    auto station2_ok = [&](const SystemState& layout) {
        return [&r, layout](long long i) { return gap(r, layout, i) >= -kMarginTol; };
    };

    // Tail routing to Station 1 across every two-job decision layout.
    if (!a2 || cls.regime != RateRegime::M1LessThanM2) {
        const std::string why = !a2 ? a2_why
                                    : "requires m1 < m2; instance has " +
                                          std::string(to_string(cls.regime));
        out.push_back(not_applicable("tail-station1-all-layouts", why));
        out.push_back(not_applicable("tail-station1-within-cutoffs", why));
    } else {
        out.push_back(tail_claim("tail-station1-all-layouts", imax,
                                 "station 1 optimal (or tied) at every decision layout",
                                 [&](long long i) {
                                     return station1_ok(kLayout200)(i) &&
                                            station1_ok(kLayout110)(i) && station1_ok(kLayout101)(i);
                                 }));
        // Explicit cutoffs from the closed-form constants.
        const BoundConstants b = bound_constants(p);
        Certificate cut{"tail-station1-within-cutoffs", CertStatus::Inconclusive, "", std::nullopt};
        const struct {
            double cutoff;
            SystemState layout;
        } parts[] = {{b.queue_cutoff_101, kLayout101},
                     {b.queue_cutoff_200.value_or(0.0), kLayout200}};
        int checked = 0;
        for (const auto& part : parts) {
            const long long lo = std::max(0LL, static_cast<long long>(std::ceil(part.cutoff)));
            cut.detail += "cutoff " + format_g12(part.cutoff) + " at (i," +
                          std::to_string(part.layout.station0) + "," +
                          std::to_string(part.layout.station1) + "," +
                          std::to_string(part.layout.station2) + "); ";
            if (lo > imax) {
                cut.detail += "beyond solved range; ";
                continue;
            }
            ++checked;
            for (long long i = lo; i <= imax; ++i) {
                if (!station1_ok(part.layout)(i)) {
                    cut.status = CertStatus::Violated;
                    cut.detail += "violated at i=" + std::to_string(i) + "; ";
                }
            }
        }
        if (cut.status != CertStatus::Violated)
            cut.status = checked > 0 ? CertStatus::Certified : CertStatus::Inconclusive;
        if (checked == 0) cut.detail += "no cutoff falls within the solved range";
        out.push_back(std::move(cut));
    }

    const bool m1_greater = cls.regime == RateRegime::M1WithinTwiceM2 ||
                            cls.regime == RateRegime::M1BeyondTwiceM2;

    // Station 2 whenever it can be entered without waiting.
    if (!a2) {
        out.push_back(not_applicable("station2-when-no-wait", a2_why));
    } else if (!m1_greater) {
        out.push_back(not_applicable("station2-when-no-wait",
                                     "requires m1 > m2; instance has " +
                                         std::string(to_string(cls.regime))));
    } else {
        out.push_back(for_all("station2-when-no-wait", 0, imax,
                              "station 2 optimal (or tied) at (i,1,1,0) and (i,2,0,0)",
                              [&](long long i) {
                                  return station2_ok(kLayout110)(i) && station2_ok(kLayout200)(i);
                              }));
    }

    // Blocked-state tails.
    if (!a2) {
        out.push_back(not_applicable("blocked-tail-station1", a2_why));
        out.push_back(not_applicable("blocked-tail-station2", a2_why));
        return out;
    }
    if (cls.regime == RateRegime::M1WithinTwiceM2) {
        out.push_back(tail_claim("blocked-tail-station1", imax,
                                 "station 1 optimal (or tied) at (i,1,0,1)",
                                 station1_ok(kLayout101)));
    } else {
        out.push_back(not_applicable("blocked-tail-station1",
                                     "requires m2 < m1 <= 2*m2; instance has " +
                                         std::string(to_string(cls.regime))));
    }
    if (cls.regime == RateRegime::M1BeyondTwiceM2 && cls.mu0_below_limit.value_or(false)) {
        out.push_back(tail_claim("blocked-tail-station2", imax,
                                 "station 2 optimal (or tied) at (i,1,0,1)",
                                 station2_ok(kLayout101)));
    } else {
        std::string why = cls.regime != RateRegime::M1BeyondTwiceM2
                              ? "requires m1 > 2*m2; instance has " +
                                    std::string(to_string(cls.regime))
                              : "requires mu0 < " + format_g12(*cls.mu0_limit) + "; instance has mu0=" +
                                    format_g12(p.mu0);
        out.push_back(not_applicable("blocked-tail-station2", std::move(why)));
    }
    return out;
}

std::vector<Certificate> certify_always_station1(const SolveResult& r) {
    const ModelParams& p = r.params();
    const RegimeClassification cls = classify(p);
    const long long imax = r.n_max() - 2;
    std::vector<Certificate> out;

    const double lhs = p.h1 / p.mu1, rhs = p.h2 / p.mu2;
    const bool faster1 = cls.regime == RateRegime::M1LessThanM2 || cls.regime == RateRegime::RatesEqual;

    // Station 1 faster and no more expensive: route there always. "Always"
    // is on the two-job decision set; the lone-job boundary state is free to
    // idle one server either way.
    if (faster1 && lhs <= rhs) {
        out.push_back(for_all(
            "always-station1", 0, imax,
            "station 1 optimal (or tied) at every two-job decision state", [&](long long i) {
                return gap(r, kLayout200, i) <= kMarginTol && gap(r, kLayout110, i) <= kMarginTol &&
                       gap(r, kLayout101, i) <= kMarginTol;
            }));
    } else {
        out.push_back(not_applicable("always-station1",
                                     "requires m1 <= m2 and m1*h1 <= m2*h2; instance has " +
                                         std::string(to_string(cls.regime)) + ", " +
                                         std::string(to_string(cls.cost_order))));
    }

    if (cls.station2_preferred() && cls.regime == RateRegime::M1WithinTwiceM2 &&
        cls.station1_within_double_cost) {
        out.push_back(for_all("blocked-always-station1", 0, imax,
                              "station 1 optimal (or tied) at (i,1,0,1)",
                              [&](long long i) { return gap(r, kLayout101, i) <= kMarginTol; }));
    } else {
        out.push_back(not_applicable(
            "blocked-always-station1",
            "requires h1/mu1 >= h2/mu2, m2 < m1 <= 2*m2 and m1*h1 <= 2*m2*h2"));
    }
    return out;
}

std::vector<Certificate> certify_equal_rates(const SolveResult& r) {
    const ModelParams& p = r.params();
    const RegimeClassification cls = classify(p);
    const long long imax = r.n_max() - 2;
    std::vector<Certificate> out;

    static const char* kIds[] = {
        "equal-rates-station2-when-no-wait", "equal-rates-blocked-tail-station1",
        "equal-rates-monotone-queue",        "equal-rates-threshold-k-to-l",
        "equal-rates-threshold-j-to-l",      "equal-rates-threshold-k-to-j",
    };
    if (cls.regime != RateRegime::RatesEqual || !cls.station2_preferred()) {
        const std::string why =
            cls.regime != RateRegime::RatesEqual
                ? "requires mu1 = mu2; instance has " + std::string(to_string(cls.regime))
                : "requires h1 >= h2; instance has " + std::string(to_string(cls.cost_order));
        for (const char* id : kIds) out.push_back(not_applicable(id, why));
        return out;
    }

    out.push_back(for_all(kIds[0], 0, imax,
                          "station 2 optimal (or tied) at (i,1,1,0) and (i,2,0,0)",
                          [&](long long i) {
                              return gap(r, kLayout110, i) >= -kMarginTol &&
                                     gap(r, kLayout200, i) >= -kMarginTol;
                          }));
    out.push_back(tail_claim(kIds[1], imax, "station 1 optimal (or tied) at (i,1,0,1)",
                             [&](long long i) { return gap(r, kLayout101, i) <= kMarginTol; }));
    out.push_back(for_all(kIds[2], 0, imax - 1,
                          "decision gaps nonincreasing in the queue length", [&](long long i) {
                              return gap(r, kLayout110, i) - gap(r, kLayout110, i + 1) >= -kMarginTol &&
                                     gap(r, kLayout101, i) - gap(r, kLayout101, i + 1) >= -kMarginTol &&
                                     gap(r, kLayout200, i) - gap(r, kLayout200, i + 1) >= -kMarginTol;
                          }));
    out.push_back(for_all(kIds[3], 0, imax, "gap at (i,1,1,0) >= gap at (i,1,0,1)",
                          [&](long long i) {
                              return gap(r, kLayout110, i) - gap(r, kLayout101, i) >= -kMarginTol;
                          }));
    out.push_back(for_all(kIds[4], 0, imax, "gap at (i,2,0,0) >= gap at (i,1,0,1)",
                          [&](long long i) {
                              return gap(r, kLayout200, i) - gap(r, kLayout101, i) >= -kMarginTol;
                          }));
    out.push_back(for_all(kIds[5], 0, imax, "gap at (i,1,1,0) >= gap at (i,2,0,0)",
                          [&](long long i) {
                              return gap(r, kLayout110, i) - gap(r, kLayout200, i) >= -kMarginTol;
                          }));
    return out;
}

std::vector<Certificate> certify_all(const SolveResult& r) {
    std::vector<Certificate> out = certify_rate_ordering(r);
    for (auto& c : certify_always_station1(r)) out.push_back(std::move(c));
    for (auto& c : certify_equal_rates(r)) out.push_back(std::move(c));
    return out;
}

std::string format_certificates(const std::vector<Certificate>& certs) {
    std::string out;
    for (const auto& c : certs) {
        out += "[" + c.id + "]\n";
        out += std::string("status: ") + to_string(c.status) + "\n";
        if (c.stable_from.has_value())
            out += "stable_from: " + std::to_string(*c.stable_from) + "\n";
        if (!c.detail.empty()) out += "detail: " + c.detail + "\n";
        out += "\n";
    }
    return out;
}

}  // namespace tqclear
