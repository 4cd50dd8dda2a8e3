#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqclear/solve.hpp"

namespace tqclear {

/// Margin tolerance shared by all structural and inequality checks: a claim
/// "x >= y" passes when x - y >= -kMarginTol.
constexpr double kMarginTol = 1e-9;

/// Mean-service-time ordering of the two second-phase stations.
enum class RateRegime {
    M1LessThanM2,      ///< Station 1 strictly faster
    RatesEqual,        ///< mu1 == mu2
    M1WithinTwiceM2,   ///< Station 1 slower, but by at most a factor of two
    M1BeyondTwiceM2,   ///< Station 1 more than twice as slow
};

/// Cost-to-serve ordering h1/mu1 vs h2/mu2.
enum class CostOrder {
    StrictlyStation2,  ///< h1/mu1 > h2/mu2
    Equal,             ///< h1/mu1 == h2/mu2
    Reversed,          ///< h1/mu1 < h2/mu2 (Station 1 is the cheap one)
};

const char* to_string(RateRegime r);
const char* to_string(CostOrder c);

struct RegimeClassification {
    RateRegime regime;
    CostOrder cost_order;
    /// m1*h1 <= 2*m2*h2: a lone job is cheaper at Station 1 than two queued
    /// services at Station 2.
    bool station1_within_double_cost;
    /// Small-mu0 limit below which the blocked state eventually routes to
    /// Station 2; only defined in the M1BeyondTwiceM2 regime.
    std::optional<double> mu0_limit;
    std::optional<bool> mu0_below_limit;

    bool station2_preferred() const { return cost_order != CostOrder::Reversed; }
};

/// Regime from exact comparisons of the user-entered rates (no epsilon
/// snapping; equality means literal equality).
RegimeClassification classify(const ModelParams& params);

/// Closed-form constants entering the explicit queue-length cutoffs and the
/// small-mu0 limit. The cutoffs carry meaning only in the regime they were
/// derived for (queue cutoffs: mu1 > mu2; mu0 limit: mu2 > 2*mu1).
struct BoundConstants {
    double c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    /// Queue length past which Station 1 is optimal at (i,1,0,1).
    double queue_cutoff_101 = 0;
    /// Same at (i,2,0,0); the first of its two branches divides by mu1-mu2
    /// and is omitted when the rates are equal.
    std::optional<double> queue_cutoff_200;
    double ct1 = 0, ct2 = 0, ct3 = 0;
    double mu0_limit = 0;
};

BoundConstants bound_constants(const ModelParams& params);

enum class CertStatus {
    Certified,      ///< claim verified over the whole checked range
    Inconclusive,   ///< behavior did not stabilize within n_max; not a failure
    Violated,       ///< claim false at the recorded witness
    NotApplicable,  ///< hypothesis of the statement not met
};

const char* to_string(CertStatus s);

/// Outcome of checking one structural statement on a solved instance.
struct Certificate {
    std::string id;
    CertStatus status = CertStatus::NotApplicable;
    std::string detail;
    /// Queue length from which the claimed tail behavior holds through the
    /// solved range, when the claim is of tail form.
    std::optional<long long> stable_from;

    bool ok() const { return status != CertStatus::Violated; }
};

/// Statements driven by the rate ordering: tail routing to Station 1 when
/// Station 1 is faster (with the explicit cutoff check), Station 2 whenever
/// it is idle when Station 2 is faster, and the two blocked-state tail
/// claims. Always emits the same five certificate ids.
std::vector<Certificate> certify_rate_ordering(const SolveResult& result);

/// Statements asserting Station 1 everywhere: on the whole two-job decision
/// set when Station 1 is both faster and cheaper, and at the blocked states
/// when a lone Station-1 service undercuts two queued Station-2 services.
std::vector<Certificate> certify_always_station1(const SolveResult& result);

/// Equal-rate structure: Station 2 whenever idle, eventual Station 1 at the
/// blocked states, monotonicity of the decision gaps in the queue length,
/// and the three pairwise decision-gap orderings.
std::vector<Certificate> certify_equal_rates(const SolveResult& result);

/// All structural certificates in catalogue order.
std::vector<Certificate> certify_all(const SolveResult& result);

/// One text block per certificate (id, status, witnesses, details).
std::string format_certificates(const std::vector<Certificate>& certs);

}  // namespace tqclear
