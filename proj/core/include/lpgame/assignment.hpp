#pragma once

#include <utility>

#include "lpgame/game.hpp"
#include "lpgame/lp.hpp"

namespace lpgame {

/// n workers, n jobs, strictly positive surplus mu_ij.
struct AssignmentInstance {
    RMat mu;

    explicit AssignmentInstance(RMat mu_);

    int n() const { return mu.rows; }
};

/// The 2n x n^2 hide-and-seek game: the column player hides in an edge
/// (i, j), the row player guesses a vertex; a guessed endpoint pays
/// 1/mu_ij. Columns are row-major over edges; rows list the n row-vertices
/// first, then the n column-vertices.
struct HideAndSeekGame {
    RMat M;
    std::vector<std::pair<int, int>> column_edge;
};

/// The assignment LP: n^2 variables x_ij, row sums <= 1, column sums <= 1,
/// objective mu flattened row-major.
LPInstance assignment_lp(const AssignmentInstance& a);

HideAndSeekGame hide_and_seek(const AssignmentInstance& a);

/// Column strategy supported on the matching {(i, sigma(i))} with edge
/// probabilities proportional to mu_{i sigma(i)}.
MixedStrategy matching_to_column_strategy(const AssignmentInstance& a,
                                          const std::vector<int>& sigma);

/// Maximum-weight perfect matching by permutation enumeration; refuses n > 8.
Rat max_matching_weight(const AssignmentInstance& a);

struct HideAndSeekCheck {
    Rat game_value;
    Rat max_matching_weight;
    bool reciprocal;  // game_value == 1 / max_matching_weight
};

HideAndSeekCheck check_hide_and_seek_value(const AssignmentInstance& a);

}  // namespace lpgame
