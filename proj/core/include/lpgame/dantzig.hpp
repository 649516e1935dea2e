#pragma once

#include "lpgame/game.hpp"
#include "lpgame/lp.hpp"

namespace lpgame {

/// The skew-symmetric (m+n+1)-square game
///   [[ 0,  A, -b],
///    [-A', 0,  c],
///    [ b', -c', 0]].
struct DantzigGame {
    RMat K;
    LPInstance source;
};

/// A strategy (p, q, t) over the rows of K; for a maximin strategy the game
/// value is 0 and t(b'p - c'q) = 0 holds automatically.
struct DantzigStrategy {
    RVec p;
    RVec q;
    Rat t;
};

DantzigGame dantzig_matrix(const LPInstance& lp);

/// Checks p, q, t >= 0, 1'p + 1'q + t = 1, Aq - bt <= 0, -A'p + ct <= 0,
/// b'p - c'q <= 0, and t(b'p - c'q) = 0, all exactly.
VerifyReport verify_dantzig_strategy(const DantzigGame& g, const DantzigStrategy& s);

/// The case the classic extraction cannot decide: t* = 0 and b'p* = c'q*.
struct Hole {};

/// Dantzig's original extraction. Throws if s is not a verified maximin
/// strategy of the game of lp.
std::variant<LPOutcome, Hole> extract_classic(const LPInstance& lp,
                                              const DantzigStrategy& s);

/// Extraction valid for b, c > 0: t* = 0 always yields the unboundedness
/// certificate q* (witness 0); never a hole.
LPOutcome extract_positive(const LPInstance& lp, const DantzigStrategy& s);

/// Solves the game of K and splits the row maximin strategy into (p, q, t).
DantzigStrategy solve_dantzig_game(const DantzigGame& g);

/// End-to-end pipeline for b, c > 0: build the game, solve it, extract.
LPOutcome solve_lp_via_dantzig(const LPInstance& lp);

}  // namespace lpgame
