#pragma once

#include <string>
#include <variant>

#include "lpgame/assignment.hpp"
#include "lpgame/game.hpp"
#include "lpgame/lp.hpp"

namespace lpgame {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_)
    {
    }
};

/// A parsed instance file. Format (lines, '#' starts a comment):
///   lp                      game            assignment
///   m n                     m n             n
///   A (m*n rationals)       M (m*n)         mu (n*n)
///   b (m rationals)
///   c (n rationals)
/// Rationals are "p/q" or integer tokens; "3/6" normalizes to 1/2.
struct InstanceFile {
    enum class Kind { Lp, Game, Assignment };
    Kind kind;
    std::variant<LPInstance, Game, AssignmentInstance> payload;
};

InstanceFile parse_instance(const std::string& text);
std::string serialize_instance(const InstanceFile& inst);

/// Claim files for the verify subcommand. Formats:
///   optimal      x (n) / y (m) / value       (one value per whitespace token)
///   infeasible   z (m)
///   unbounded    w (n) [witness (n)]
///   solution     value / p (m) / q (n)       (for game instances)
struct ClaimFile {
    std::variant<LPOutcome, GameSolution> claim;
};

ClaimFile parse_claim(const std::string& text, int m, int n);
std::string serialize_outcome(const LPOutcome& outcome);
std::string serialize_game_solution(const GameSolution& sol);

/// Stable exit codes of the CLI.
namespace exit_code {
inline constexpr int kSolved = 0;
inline constexpr int kInvalidClaim = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInfeasible = 10;
inline constexpr int kUnbounded = 11;
inline constexpr int kHole = 12;
}  // namespace exit_code

}  // namespace lpgame
