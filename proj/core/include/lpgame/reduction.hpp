#pragma once

#include "lpgame/game.hpp"
#include "lpgame/lp.hpp"

namespace lpgame {

/// Row/column rescaling of an LP with b > 0 and c > 0:
/// m_ij = a_ij / (b_i c_j). Originals retained to invert the scaling.
struct ScaledLP {
    RMat M;
    RVec b;
    RVec c;
};

struct ReducedPrimalDual {
    RVec xi;   // optimal for (P'): max 1'xi, M xi <= 1, xi >= 0
    RVec eta;  // optimal for (D')
};

struct ReducedRay {
    RVec xi_bar;  // M xi_bar <= 0, xi_bar >= 0, 1'xi_bar > 0
};

using ReducedSolution = std::variant<ReducedPrimalDual, ReducedRay>;

/// Requires b > 0 and c > 0; throws naming the first offending index.
ScaledLP scale_lp(const LPInstance& lp);

/// x = C xi, i.e. x_j = xi_j / c_j.
RVec lift_primal(const ScaledLP& s, const RVec& xi);

/// y = B eta, i.e. y_i = eta_i / b_i.
RVec lift_dual(const ScaledLP& s, const RVec& eta);

/// Maximin pair -> reduced-space solution: positive value yields
/// (q*/v, p*/v) optimal for (P', D'); value <= 0 yields the ray q*.
ReducedSolution game_to_reduced(const ScaledLP& s, const GameSolution& sol);

struct NonpositiveValueReport {
    MixedStrategy q;  // feasible point (q, v=0) for (Col), witnessing value <= 0
    std::string note;
};

/// Reduced-space solution -> game solution (Thm-style converse). An
/// unbounded reduced solution only pins down the sign of the value.
std::variant<GameSolution, NonpositiveValueReport>
reduced_to_game(const ScaledLP& s, const ReducedSolution& r);

/// Full pipeline scale -> solve_game -> extract -> lift for b, c > 0.
/// Never returns InfeasibilityCert; unbounded outcomes carry witness 0.
LPOutcome solve_positive_lp(const LPInstance& lp);

/// The exact value of the game on M; positive iff (D') is feasible.
Rat degree_of_feasibility(const ScaledLP& s);

}  // namespace lpgame
