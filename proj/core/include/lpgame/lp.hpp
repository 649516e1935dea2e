#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpgame/linalg.hpp"

namespace lpgame {

/// The primal/dual pair
///   (P) max cᵀx  s.t. Ax ≤ b, x ≥ 0
///   (D) min bᵀy  s.t. Aᵀy ≥ c, y ≥ 0.
struct LPInstance {
    RMat A;
    RVec b;
    RVec c;

    LPInstance(RMat A_, RVec b_, RVec c_);

    int m() const { return A.rows; }
    int n() const { return A.cols; }
};

/// Optimal solutions x of (P) and y of (D) with cᵀx = bᵀy.
struct OptimalPair {
    RVec x;
    RVec y;
    Rat value;

    bool operator==(const OptimalPair&) const = default;
};

/// z ≥ 0 with Aᵀz ≥ 0 and bᵀz < 0; proves (P) infeasible.
struct InfeasibilityCert {
    RVec z;

    bool operator==(const InfeasibilityCert&) const = default;
};

/// Ray w ≥ 0 with Aw ≤ 0 and cᵀw > 0; with a feasible witness it proves
/// (P) unbounded.
struct UnboundednessCert {
    RVec w;
    std::optional<RVec> feasible_witness;

    bool operator==(const UnboundednessCert&) const = default;
};

using LPOutcome = std::variant<OptimalPair, InfeasibilityCert, UnboundednessCert>;

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;

    explicit operator bool() const { return ok; }
    void fail(std::string what)
    {
        ok = false;
        violations.push_back(std::move(what));
    }
};

/// Checks every invariant of the carried outcome variant exactly.
VerifyReport verify_outcome(const LPInstance& lp, const LPOutcome& outcome);

/// A certificate of (P) retagged for the dual program (D).
struct DualCertificate {
    enum class Kind {
        UnboundednessForDual,   // from an InfeasibilityCert of (P)
        InfeasibilityForDual,   // from an UnboundednessCert of (P)
    };
    Kind kind;
    RVec vec;
    std::vector<std::string> conditions;  // the dual-side inequalities it certifies
};

/// Transfers an infeasibility/unboundedness certificate of (P) to the
/// certificate it constitutes for (D). Throws std::invalid_argument if the
/// input certificate does not verify against lp.
DualCertificate cert_transfer_dual(const LPOutcome& cert, const LPInstance& lp);

const char* outcome_name(const LPOutcome& outcome);

}  // namespace lpgame
