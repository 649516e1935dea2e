#include <doctest.h>

#include "lpgame/brute_force.hpp"
#include "lpgame/reduction.hpp"
#include "test_util.hpp"

using namespace lpgame;

namespace {

LPInstance golden_unbounded()
{
    return LPInstance(RMat{{Rat(-1), rat(1, 2)}, {Rat(1), rat(-1, 2)}},
                      RVec{Rat(1), Rat(1)}, RVec{Rat(1), Rat(1)});
}

}  // namespace

TEST_CASE("scale_lp divides by b_i c_j and rejects nonpositive data")
{
    const LPInstance lp(RMat{{Rat(4), Rat(6)}}, RVec{Rat(2)}, RVec{Rat(2), Rat(3)});
    const auto s = scale_lp(lp);
    CHECK(s.M(0, 0) == 1);  // 4 / (2*2)
    CHECK(s.M(0, 1) == 1);  // 6 / (2*3)

    CHECK_THROWS_AS(scale_lp(LPInstance(RMat{{Rat(1)}}, RVec{Rat(0)}, RVec{Rat(1)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(scale_lp(LPInstance(RMat{{Rat(1)}}, RVec{Rat(1)}, RVec{Rat(-1)})),
                    std::invalid_argument);
}

TEST_CASE("lift inverts the scaling")
{
    const LPInstance lp(RMat{{Rat(4), Rat(6)}}, RVec{Rat(2)}, RVec{Rat(2), Rat(3)});
    const auto s = scale_lp(lp);
    CHECK(lift_primal(s, RVec{Rat(2), Rat(3)}) == RVec{Rat(1), Rat(1)});
    CHECK(lift_dual(s, RVec{Rat(4)}) == RVec{Rat(2)});
}

TEST_CASE("game_to_reduced on the scaled golden instance yields a ray")
{
    const auto s = scale_lp(golden_unbounded());
    const auto sol = solve_game(Game(s.M));
    CHECK(sol.value <= 0);
    const auto r = game_to_reduced(s, sol);
    const auto& ray = std::get<ReducedRay>(r);
    const auto ord = componentwise_cmp(mat_vec(s.M, ray.xi_bar), zeros(2));
    CHECK((ord == VecOrder::LE || ord == VecOrder::EQ));
    CHECK(sum(ray.xi_bar) > 0);
}

TEST_CASE("reduced_to_game reconstructs a maximin pair")
{
    testutil::Rng rng(55);
    int done = 0;
    while (done < 40) {
        const LPInstance lp = testutil::random_positive_lp(rng, 3, 3);
        const auto s = scale_lp(lp);
        const auto sol = solve_game(Game(s.M));
        const auto r = game_to_reduced(s, sol);
        const auto back = reduced_to_game(s, r);
        if (const auto* gs = std::get_if<GameSolution>(&back)) {
            CHECK(gs->value == sol.value);
            CHECK(verify_maximin(Game(s.M), *gs).ok);
        } else {
            const auto& rep = std::get<NonpositiveValueReport>(back);
            // The witness row of (Col): M q <= 0 certifies value <= 0.
            const auto ord = componentwise_cmp(mat_vec(s.M, rep.q.probs), zeros(lp.m()));
            CHECK((ord == VecOrder::LE || ord == VecOrder::EQ));
            CHECK(sol.value <= 0);
        }
        ++done;
    }
}

TEST_CASE("solve_positive_lp matches the oracle")
{
    testutil::Rng rng(56);
    for (int it = 0; it < 120; ++it) {
        const LPInstance lp = testutil::random_positive_lp(rng, 3, 3);
        const auto fast = solve_positive_lp(lp);
        const auto slow = brute_force_lp(lp);
        REQUIRE_FALSE(std::holds_alternative<InfeasibilityCert>(fast));
        REQUIRE(fast.index() == slow.index());
        if (const auto* a = std::get_if<OptimalPair>(&fast))
            CHECK(a->value == std::get<OptimalPair>(slow).value);
        CHECK(verify_outcome(lp, fast).ok);
    }
}

TEST_CASE("degree_of_feasibility sign separates the outcomes")
{
    testutil::Rng rng(57);
    for (int it = 0; it < 60; ++it) {
        const LPInstance lp = testutil::random_positive_lp(rng, 3, 3);
        const auto s = scale_lp(lp);
        const Rat v = degree_of_feasibility(s);
        const auto out = solve_positive_lp(lp);
        if (v > 0)
            CHECK(std::holds_alternative<OptimalPair>(out));
        else
            CHECK(std::holds_alternative<UnboundednessCert>(out));
    }
}

TEST_CASE("positive-value reduction recovers the optimal value exactly")
{
    // max x1 + x2 s.t. x1 <= 1, x2 <= 1: optimum 2, game value 1/2.
    const LPInstance lp(identity(2), ones(2), ones(2));
    const auto s = scale_lp(lp);
    CHECK(degree_of_feasibility(s) == rat(1, 2));
    const auto out = solve_positive_lp(lp);
    const auto& opt = std::get<OptimalPair>(out);
    CHECK(opt.value == 2);
    CHECK(opt.x == ones(2));
}
