#pragma once

#include "lpgame/lp.hpp"

namespace lpgame {

/// Independent enumeration oracle: solves (P) by enumerating all basic
/// solutions of the slack form, detecting unboundedness by vertex
/// enumeration of the truncated recession cone and extracting certificates
/// from the corresponding alternative systems. Refuses instances whose basis
/// count exceeds max_bases.
LPOutcome brute_force_lp(const LPInstance& lp, long max_bases = 2000000);

}  // namespace lpgame
