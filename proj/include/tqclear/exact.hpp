#pragma once

#include <cstdint>
#include <vector>

#include "tqclear/model.hpp"

namespace tqclear {

/// Result of re-solving a small instance in exact rational arithmetic.
/// Every value is a finite rational expression in the inputs, so the sign of
/// each decision gap is unambiguous; floating-point tie flags can be audited
/// against it.
class ExactAudit {
public:
    ExactAudit(StateSpace space, std::vector<double> values, std::vector<std::int8_t> signs)
        : space_(std::move(space)), values_(std::move(values)), signs_(std::move(signs)) {}

    const StateSpace& space() const { return space_; }

    /// Value rounded to the nearest double.
    double value(const SystemState& s) const { return values_[space_.index_of(s)]; }

    /// Sign of value(to Station 1) - value(to Station 2) at a decision state:
    /// -1, 0 (exact tie) or +1.
    int sign(const SystemState& s) const;

private:
    StateSpace space_;
    std::vector<double> values_;
    std::vector<std::int8_t> signs_;
};

/// Re-solves with rational arithmetic (inputs converted exactly from their
/// binary representation). Limited to n_max <= 30; intended for audits, not
/// production runs.
ExactAudit solve_exact(const ModelParams& params, int n_max);

}  // namespace tqclear
