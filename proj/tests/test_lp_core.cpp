#include <doctest.h>

#include "lpgame/brute_force.hpp"
#include "lpgame/simplex.hpp"
#include "test_util.hpp"

using namespace lpgame;

namespace {

LPInstance one_dim()
{
    return LPInstance(RMat{{Rat(1)}}, RVec{Rat(2)}, RVec{Rat(3)});
}

LPInstance infeasible_1d()
{
    return LPInstance(RMat{{Rat(1)}}, RVec{Rat(-1)}, RVec{Rat(1)});
}

LPInstance unbounded_1d()
{
    return LPInstance(RMat{{Rat(-1)}}, RVec{Rat(1)}, RVec{Rat(1)});
}

// The 2x2 instance whose game reduction has value 0 (unbounded primal).
LPInstance golden_unbounded()
{
    return LPInstance(RMat{{Rat(-1), rat(1, 2)}, {Rat(1), rat(-1, 2)}},
                      RVec{Rat(1), Rat(1)}, RVec{Rat(1), Rat(1)});
}

}  // namespace

TEST_CASE("verify_outcome accepts valid outcomes")
{
    CHECK(verify_outcome(one_dim(), OptimalPair{RVec{Rat(2)}, RVec{Rat(3)}, Rat(6)}).ok);
    CHECK(verify_outcome(infeasible_1d(), InfeasibilityCert{RVec{Rat(1)}}).ok);
    CHECK(verify_outcome(golden_unbounded(),
                         UnboundednessCert{RVec{rat(1, 6), rat(1, 3)}, zeros(2)})
              .ok);
}

TEST_CASE("verify_outcome reports violations")
{
    const auto rep = verify_outcome(one_dim(), OptimalPair{RVec{Rat(3)}, RVec{Rat(3)}, Rat(9)});
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.violations.empty());

    CHECK_FALSE(verify_outcome(one_dim(), InfeasibilityCert{RVec{Rat(1)}}).ok);
    CHECK_THROWS_AS(
        (void)verify_outcome(one_dim(), OptimalPair{RVec{Rat(1), Rat(1)}, RVec{Rat(3)}, Rat(6)}),
        std::invalid_argument);
}

TEST_CASE("cert_transfer_dual retags certificates")
{
    const auto lp = infeasible_1d();
    const auto dual = cert_transfer_dual(InfeasibilityCert{RVec{Rat(1)}}, lp);
    CHECK(dual.kind == DualCertificate::Kind::UnboundednessForDual);
    CHECK(dual.vec == RVec{Rat(1)});

    const auto lp2 = unbounded_1d();
    const auto dual2 = cert_transfer_dual(UnboundednessCert{RVec{Rat(1)}, {}}, lp2);
    CHECK(dual2.kind == DualCertificate::Kind::InfeasibilityForDual);

    CHECK_THROWS_AS(cert_transfer_dual(OptimalPair{RVec{Rat(2)}, RVec{Rat(3)}, Rat(6)}, lp),
                    std::invalid_argument);
    CHECK_THROWS_AS(cert_transfer_dual(InfeasibilityCert{RVec{Rat(1)}}, one_dim()),
                    std::invalid_argument);
}

TEST_CASE("solve_lp golden instances")
{
    SUBCASE("optimal")
    {
        const auto out = solve_lp(one_dim());
        const auto& opt = std::get<OptimalPair>(out);
        CHECK(opt.x == RVec{Rat(2)});
        CHECK(opt.y == RVec{Rat(3)});
        CHECK(opt.value == 6);
    }
    SUBCASE("infeasible")
    {
        const auto out = solve_lp(infeasible_1d());
        CHECK(std::holds_alternative<InfeasibilityCert>(out));
        CHECK(verify_outcome(infeasible_1d(), out).ok);
    }
    SUBCASE("unbounded carries a witness")
    {
        const auto out = solve_lp(unbounded_1d());
        const auto& unb = std::get<UnboundednessCert>(out);
        CHECK(unb.feasible_witness.has_value());
        CHECK(verify_outcome(unbounded_1d(), out).ok);
    }
    SUBCASE("golden 2x2 is unbounded")
    {
        const auto out = solve_lp(golden_unbounded());
        CHECK(std::holds_alternative<UnboundednessCert>(out));
        CHECK(verify_outcome(golden_unbounded(), out).ok);
    }
}

TEST_CASE("brute_force_lp agrees on hand instances")
{
    const LPInstance diag(RMat{{Rat(1), Rat(0)}, {Rat(0), Rat(2)}}, RVec{Rat(1), Rat(2)},
                          RVec{Rat(1), Rat(1)});
    const auto out = brute_force_lp(diag);
    const auto& opt = std::get<OptimalPair>(out);
    CHECK(opt.value == 2);
    CHECK(opt.x == RVec{Rat(1), Rat(1)});

    CHECK(std::holds_alternative<UnboundednessCert>(brute_force_lp(golden_unbounded())));
    CHECK(std::holds_alternative<InfeasibilityCert>(brute_force_lp(infeasible_1d())));
    CHECK(verify_outcome(infeasible_1d(), brute_force_lp(infeasible_1d())).ok);
}

TEST_CASE("brute_force_lp refuses oversized instances")
{
    testutil::Rng rng(3);
    const LPInstance big(testutil::random_mat(rng, 12, 12, -2, 2),
                         testutil::random_vec(rng, 12, 1, 2), testutil::random_vec(rng, 12, 1, 2));
    CHECK_THROWS_AS(brute_force_lp(big, 1000), std::invalid_argument);
}

TEST_CASE("oracle equivalence on random small instances")
{
    testutil::Rng rng(2024);
    for (int it = 0; it < 150; ++it) {
        const LPInstance lp = testutil::random_lp(rng, 4, 2);
        const auto fast = solve_lp(lp);
        const auto slow = brute_force_lp(lp);
        REQUIRE(fast.index() == slow.index());
        if (const auto* a = std::get_if<OptimalPair>(&fast))
            CHECK(a->value == std::get<OptimalPair>(slow).value);
        CHECK(verify_outcome(lp, fast).ok);
        CHECK(verify_outcome(lp, slow).ok);
    }
}

TEST_CASE("weak and strong duality across instances")
{
    testutil::Rng rng(99);
    int pairs = 0;
    while (pairs < 50) {
        const LPInstance lp = testutil::random_lp(rng, 3, 2);
        const auto out = solve_lp(lp);
        const auto* opt = std::get_if<OptimalPair>(&out);
        if (!opt)
            continue;
        // Strong duality, exactly.
        CHECK(dot(lp.c, opt->x) == dot(lp.b, opt->y));

        // A feasible point for a different objective stays primal feasible;
        // weak duality against the original dual optimum.
        const LPInstance other(lp.A, lp.b, testutil::random_vec(rng, lp.n(), -2, 2));
        const auto out2 = solve_lp(other);
        if (const auto* opt2 = std::get_if<OptimalPair>(&out2))
            CHECK(dot(lp.c, opt2->x) <= dot(lp.b, opt->y));
        ++pairs;
    }
}

TEST_CASE("outcome exclusivity")
{
    testutil::Rng rng(123);
    for (int it = 0; it < 100; ++it) {
        const LPInstance lp = testutil::random_lp(rng, 3, 2);
        const auto out = solve_lp(lp);
        // Random nonnegative candidates must never certify the other variant.
        for (int k = 0; k < 10; ++k) {
            const RVec z = testutil::random_vec(rng, lp.m(), 0, 3);
            const RVec w = testutil::random_vec(rng, lp.n(), 0, 3);
            if (std::holds_alternative<OptimalPair>(out)) {
                CHECK_FALSE(verify_outcome(lp, InfeasibilityCert{z}).ok);
            } else if (std::holds_alternative<InfeasibilityCert>(out)) {
                // Infeasibility rules out the zero witness.
                CHECK_FALSE(verify_outcome(lp, UnboundednessCert{w, zeros(lp.n())}).ok);
            }
        }
    }
}
