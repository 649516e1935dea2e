#include <doctest.h>

#include "lpgame/brute_force.hpp"
#include "lpgame/nonneg.hpp"
#include "lpgame/simplex.hpp"
#include "test_util.hpp"

using namespace lpgame;

TEST_CASE("index_sets on a crafted instance")
{
    // Row 0 has b_0 = 0; its positive entries knock out column 0.
    // Column 2 has c_2 <= 0.
    const LPInstance lp(RMat{{Rat(2), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(1)}},
                        RVec{Rat(0), Rat(5)}, RVec{Rat(4), Rat(1), Rat(-1)});
    const auto s = index_sets(lp);
    CHECK(s.I0 == std::vector<int>{0});
    CHECK(s.J0 == std::vector<int>{0, 2});
    CHECK(s.J == std::vector<int>{2});
    CHECK(s.bigM == 2);  // max(c_0/a_00, c_2/a_02) = max(4/2, -1/1)
    CHECK(s.row_removed(0));
    CHECK_FALSE(s.row_removed(1));
    CHECK(s.col_removed(0));
    CHECK_FALSE(s.col_removed(1));
    CHECK(s.col_removed(2));
}

TEST_CASE("preprocess immediate outcomes")
{
    SUBCASE("negative right-hand side is infeasible")
    {
        const LPInstance lp(RMat{{Rat(1)}}, RVec{Rat(-1)}, RVec{Rat(1)});
        const auto r = preprocess(lp);
        const auto& out = std::get<LPOutcome>(r);
        CHECK(std::holds_alternative<InfeasibilityCert>(out));
        CHECK(verify_outcome(lp, out).ok);
    }
    SUBCASE("zero column with positive cost is unbounded")
    {
        const LPInstance lp(RMat{{Rat(1), Rat(0)}}, RVec{Rat(1)}, RVec{Rat(1), Rat(2)});
        const auto r = preprocess(lp);
        const auto& out = std::get<LPOutcome>(r);
        const auto& unb = std::get<UnboundednessCert>(out);
        CHECK(unb.w == RVec{Rat(0), Rat(1)});
        CHECK(verify_outcome(lp, out).ok);
    }
    SUBCASE("everything removed leaves the zero solution")
    {
        // b = 0 removes row 0 and column 0; c_1 <= 0 removes column 1.
        const LPInstance lp(RMat{{Rat(2), Rat(0)}}, RVec{Rat(0)}, RVec{Rat(6), Rat(-1)});
        const auto r = preprocess(lp);
        const auto& opt = std::get<OptimalPair>(std::get<LPOutcome>(r));
        CHECK(opt.x == zeros(2));
        CHECK(opt.value == 0);
        CHECK(opt.y == RVec{Rat(3)});  // bigM = 6/2
        CHECK(verify_outcome(lp, std::get<LPOutcome>(r)).ok);
    }
}

TEST_CASE("preprocess produces a positive restricted pair")
{
    const LPInstance lp(RMat{{Rat(2), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(1)}},
                        RVec{Rat(0), Rat(5)}, RVec{Rat(4), Rat(1), Rat(-1)});
    const auto r = preprocess(lp);
    const auto& rest = std::get<RestrictedLP>(r);
    CHECK(rest.hat.m() == 1);
    CHECK(rest.hat.n() == 1);
    CHECK(is_positive(rest.hat.b));
    CHECK(is_positive(rest.hat.c));
    CHECK(rest.hat.A(0, 0) == 1);
}

TEST_CASE("preprocess rejects matrices with negative entries")
{
    CHECK_THROWS_AS(preprocess(LPInstance(RMat{{Rat(-1)}}, RVec{Rat(1)}, RVec{Rat(1)})),
                    std::invalid_argument);
}

TEST_CASE("postprocess re-inserts removed coordinates")
{
    const LPInstance lp(RMat{{Rat(2), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(1)}},
                        RVec{Rat(0), Rat(5)}, RVec{Rat(4), Rat(1), Rat(-1)});
    const auto rest = std::get<RestrictedLP>(preprocess(lp));
    const auto hat_out = solve_lp(rest.hat);
    const auto out = postprocess(lp, rest, hat_out);
    const auto& opt = std::get<OptimalPair>(out);
    CHECK(opt.x.size() == 3);
    CHECK(opt.x[0] == 0);
    CHECK(opt.x[2] == 0);
    CHECK(opt.y.size() == 2);
    CHECK(opt.y[0] == rest.sets.bigM);
    CHECK(verify_outcome(lp, out).ok);

    CHECK_THROWS_AS(postprocess(lp, rest, LPOutcome{InfeasibilityCert{zeros(1)}}),
                    std::invalid_argument);
}

TEST_CASE("solve_nonneg_lp matches the oracle with both engines")
{
    testutil::Rng rng(404);
    for (int it = 0; it < 120; ++it) {
        const LPInstance lp = testutil::random_nonneg_lp(rng, 3, 3);
        const auto slow = brute_force_lp(lp);
        for (const Engine e : {Engine::VonNeumann, Engine::Dantzig}) {
            const auto fast = solve_nonneg_lp(lp, e);
            REQUIRE(fast.index() == slow.index());
            if (const auto* a = std::get_if<OptimalPair>(&fast))
                CHECK(a->value == std::get<OptimalPair>(slow).value);
            CHECK(verify_outcome(lp, fast).ok);
        }
    }
}

TEST_CASE("zero_column_unbounded_check")
{
    const LPInstance unb(RMat{{Rat(1), Rat(0)}}, RVec{Rat(1)}, RVec{Rat(0), Rat(2)});
    CHECK(zero_column_unbounded_check(unb) == 1);

    const LPInstance bounded(RMat{{Rat(1), Rat(1)}}, RVec{Rat(1)}, RVec{Rat(1), Rat(2)});
    CHECK_FALSE(zero_column_unbounded_check(bounded).has_value());
}
