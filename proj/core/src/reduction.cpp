#include "lpgame/reduction.hpp"

namespace lpgame {

namespace {

VerifyReport verify_reduced(const ScaledLP& s, const ReducedSolution& r)
{
    const int m = s.M.rows;
    const int n = s.M.cols;
    VerifyReport rep;
    if (const auto* pd = std::get_if<ReducedPrimalDual>(&r)) {
        if (static_cast<int>(pd->xi.size()) != n || static_cast<int>(pd->eta.size()) != m)
            throw std::invalid_argument("reduced solution: dimension mismatch");
        if (componentwise_cmp(mat_vec(s.M, pd->xi), ones(m)) != VecOrder::LE &&
            componentwise_cmp(mat_vec(s.M, pd->xi), ones(m)) != VecOrder::EQ)
            rep.fail("M xi <= 1");
        if (!is_nonneg(pd->xi))
            rep.fail("xi >= 0");
        const auto cmp = componentwise_cmp(vec_mat(pd->eta, s.M), ones(n));
        if (cmp != VecOrder::GE && cmp != VecOrder::EQ)
            rep.fail("M'eta >= 1");
        if (!is_nonneg(pd->eta))
            rep.fail("eta >= 0");
        if (sum(pd->xi) != sum(pd->eta))
            rep.fail("1'xi = 1'eta (optimality)");
    } else {
        const auto& ray = std::get<ReducedRay>(r);
        if (static_cast<int>(ray.xi_bar.size()) != n)
            throw std::invalid_argument("reduced ray: dimension mismatch");
        const auto cmp = componentwise_cmp(mat_vec(s.M, ray.xi_bar), zeros(m));
        if (cmp != VecOrder::LE && cmp != VecOrder::EQ)
            rep.fail("M xi_bar <= 0");
        if (!is_nonneg(ray.xi_bar))
            rep.fail("xi_bar >= 0");
        if (sum(ray.xi_bar) <= 0)
            rep.fail("1'xi_bar > 0");
    }
    return rep;
}

}  // namespace

ScaledLP scale_lp(const LPInstance& lp)
{
    for (int i = 0; i < lp.m(); ++i)
        if (lp.b[i] <= 0)
            throw std::invalid_argument("scale_lp: b[" + std::to_string(i + 1) +
                                        "] is not positive");
    for (int j = 0; j < lp.n(); ++j)
        if (lp.c[j] <= 0)
            throw std::invalid_argument("scale_lp: c[" + std::to_string(j + 1) +
                                        "] is not positive");
    RMat M(lp.m(), lp.n());
    for (int i = 0; i < lp.m(); ++i)
        for (int j = 0; j < lp.n(); ++j)
            M(i, j) = lp.A(i, j) / (lp.b[i] * lp.c[j]);
    return ScaledLP{std::move(M), lp.b, lp.c};
}

RVec lift_primal(const ScaledLP& s, const RVec& xi)
{
    if (xi.size() != s.c.size())
        throw std::invalid_argument("lift_primal: dimension mismatch");
    RVec x(xi.size());
    for (size_t j = 0; j < xi.size(); ++j)
        x[j] = xi[j] / s.c[j];
    return x;
}

RVec lift_dual(const ScaledLP& s, const RVec& eta)
{
    if (eta.size() != s.b.size())
        throw std::invalid_argument("lift_dual: dimension mismatch");
    RVec y(eta.size());
    for (size_t i = 0; i < eta.size(); ++i)
        y[i] = eta[i] / s.b[i];
    return y;
}

ReducedSolution game_to_reduced(const ScaledLP& s, const GameSolution& sol)
{
    if (!verify_maximin(Game(s.M), sol))
        throw std::invalid_argument("game_to_reduced: solution is not maximin");
    if (sol.value > 0) {
        return ReducedPrimalDual{
            scale(1 / sol.value, sol.q.probs),
            scale(1 / sol.value, sol.p.probs),
        };
    }
    return ReducedRay{sol.q.probs};
}

std::variant<GameSolution, NonpositiveValueReport>
reduced_to_game(const ScaledLP& s, const ReducedSolution& r)
{
    const auto rep = verify_reduced(s, r);
    if (!rep)
        throw std::invalid_argument("reduced_to_game: invalid reduced solution: " +
                                    (rep.violations.empty() ? std::string() : rep.violations.front()));

    if (const auto* pd = std::get_if<ReducedPrimalDual>(&r)) {
        const Rat value = 1 / sum(pd->xi);
        GameSolution sol{
            value,
            MixedStrategy{scale(value, pd->eta)},
            MixedStrategy{scale(value, pd->xi)},
        };
        if (!verify_maximin(Game(s.M), sol))
            throw std::logic_error("reduced_to_game: scaled strategies not maximin");
        return sol;
    }
    const auto& ray = std::get<ReducedRay>(r);
    const Rat alpha = 1 / sum(ray.xi_bar);
    return NonpositiveValueReport{
        MixedStrategy{scale(alpha, ray.xi_bar)},
        "game value <= 0: (q, v=0) is feasible for (Col)",
    };
}

LPOutcome solve_positive_lp(const LPInstance& lp)
{
    const ScaledLP s = scale_lp(lp);
    const GameSolution sol = solve_game(Game(s.M));
    const ReducedSolution reduced = game_to_reduced(s, sol);

    LPOutcome out = [&]() -> LPOutcome {
        if (const auto* pd = std::get_if<ReducedPrimalDual>(&reduced)) {
            RVec x = lift_primal(s, pd->xi);
            RVec y = lift_dual(s, pd->eta);
            Rat value = dot(lp.c, x);
            return OptimalPair{std::move(x), std::move(y), std::move(value)};
        }
        const auto& ray = std::get<ReducedRay>(reduced);
        return UnboundednessCert{lift_primal(s, ray.xi_bar), zeros(lp.n())};
    }();
    if (!verify_outcome(lp, out))
        throw std::logic_error("solve_positive_lp: lifted outcome failed verification");
    return out;
}

Rat degree_of_feasibility(const ScaledLP& s)
{
    return solve_game(Game(s.M)).value;
}

}  // namespace lpgame
