#pragma once

#include <optional>

#include "lpgame/lp.hpp"

namespace lpgame {

/// Index sets for preprocessing LPs with A >= 0:
///   I0 = {i : b_i = 0},  J0 = {j : a_ij > 0 for some i in I0},
///   J  = {j : c_j <= 0},  bigM = max{c_j/a_ij : j in J0, i in I0, a_ij > 0}
/// (0 when J0 is empty).
struct IndexSets {
    std::vector<int> I0;
    std::vector<int> J0;
    std::vector<int> J;
    Rat bigM;

    bool row_removed(int i) const;
    bool col_removed(int j) const;  // j in J0 ∪ J
};

struct RestrictedLP {
    LPInstance hat;  // rows I0 and columns J0 ∪ J removed; hat.b, hat.c > 0
    IndexSets sets;
    int orig_m;
    int orig_n;
};

enum class Engine { VonNeumann, Dantzig };

IndexSets index_sets(const LPInstance& lp);

/// Preprocessing: either an immediate outcome (negative b_i, zero column
/// with positive cost, or an empty restriction) or the restricted pair.
/// Requires A >= 0.
std::variant<LPOutcome, RestrictedLP> preprocess(const LPInstance& lp);

/// Re-inserts removed coordinates: zeros into x/w at J0 ∪ J, bigM into y at
/// I0. The hat outcome must not be infeasible.
LPOutcome postprocess(const LPInstance& lp, const RestrictedLP& r,
                      const LPOutcome& hat_outcome);

/// Full pipeline for A >= 0; the interior solve uses the von Neumann game
/// reduction by default, or the Dantzig reduction when selected.
LPOutcome solve_nonneg_lp(const LPInstance& lp, Engine engine = Engine::VonNeumann);

/// For feasible instances with A >= 0: the least j with c_j > 0 and an
/// all-zero column, present iff (P) is unbounded. Requires b >= 0.
std::optional<int> zero_column_unbounded_check(const LPInstance& lp);

}  // namespace lpgame
