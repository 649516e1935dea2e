#pragma once

#include "lpgame/lp.hpp"

namespace lpgame {

/// Zero-sum game: the column player pays the row player the selected entry.
struct Game {
    RMat M;

    explicit Game(RMat M_) : M(std::move(M_))
    {
        if (M.rows < 1 || M.cols < 1)
            throw std::invalid_argument("Game: payoff matrix must be nonempty");
    }

    int rows() const { return M.rows; }
    int cols() const { return M.cols; }
};

struct MixedStrategy {
    RVec probs;
};

/// Throws std::invalid_argument unless probs >= 0 and sums to 1.
MixedStrategy mixed_strategy(RVec probs);

struct GameSolution {
    Rat value;
    MixedStrategy p;  // row player
    MixedStrategy q;  // column player
};

/// Exact solve: value and a maximin pair (p, q).
GameSolution solve_game(const Game& g);

/// Checks p'M >= value and Mq <= value componentwise, plus strategy validity.
VerifyReport verify_maximin(const Game& g, const GameSolution& s);

struct FictitiousPlayResult {
    MixedStrategy p_empirical;
    MixedStrategy q_empirical;
    Rat lower;  // min over columns of p'M
    Rat upper;  // max over rows of Mq
};

/// Best-response dynamics against the empirical opponent history; lowest
/// index wins ties. The [lower, upper] interval brackets the exact value.
FictitiousPlayResult solve_game_fictitious(const Game& g, long rounds);

}  // namespace lpgame
