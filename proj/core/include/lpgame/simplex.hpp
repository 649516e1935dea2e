#pragma once

#include "lpgame/lp.hpp"

namespace lpgame {

/// Exact two-phase simplex with Bland's smallest-index rule. Always
/// terminates and returns a verified outcome; unbounded outcomes carry a
/// feasible witness.
LPOutcome solve_lp(const LPInstance& lp);

}  // namespace lpgame
