#include "lpgame/game.hpp"

#include <algorithm>

#include "lpgame/simplex.hpp"

namespace lpgame {

MixedStrategy mixed_strategy(RVec probs)
{
    if (!is_nonneg(probs) || sum(probs) != 1)
        throw std::invalid_argument("mixed_strategy: not a probability vector");
    return MixedStrategy{std::move(probs)};
}

GameSolution solve_game(const Game& g)
{
    // Shift to a strictly positive matrix so that the game LP
    //   max 1'xi  s.t.  M' xi <= 1, xi >= 0
    // has a finite positive optimum V; then value(M') = 1/V with
    // q = xi*/V and p = eta*/V from the primal and dual optima.
    Rat lo = g.M.a.front();
    for (const Rat& e : g.M.a)
        lo = std::min(lo, e);
    const Rat shift = lo <= 0 ? 1 - lo : Rat(0);

    RMat Mp = g.M;
    for (Rat& e : Mp.a)
        e += shift;

    const LPInstance lp(Mp, ones(g.rows()), ones(g.cols()));
    const LPOutcome out = solve_lp(lp);
    const auto* opt = std::get_if<OptimalPair>(&out);
    if (!opt || opt->value <= 0)
        throw std::logic_error("solve_game: positive game LP must have a positive optimum");

    const Rat value_shifted = 1 / opt->value;
    GameSolution s{
        value_shifted - shift,
        MixedStrategy{scale(value_shifted, opt->y)},
        MixedStrategy{scale(value_shifted, opt->x)},
    };
    if (!verify_maximin(g, s))
        throw std::logic_error("solve_game: solution failed maximin verification");
    return s;
}

VerifyReport verify_maximin(const Game& g, const GameSolution& s)
{
    if (static_cast<int>(s.p.probs.size()) != g.rows() ||
        static_cast<int>(s.q.probs.size()) != g.cols())
        throw std::invalid_argument("verify_maximin: strategy dimension mismatch");

    VerifyReport rep;
    if (!is_nonneg(s.p.probs) || sum(s.p.probs) != 1)
        rep.fail("p is a probability distribution");
    if (!is_nonneg(s.q.probs) || sum(s.q.probs) != 1)
        rep.fail("q is a probability distribution");

    const RVec row_payoffs = vec_mat(s.p.probs, g.M);  // p'M per column
    for (int j = 0; j < g.cols(); ++j)
        if (row_payoffs[j] < s.value)
            rep.fail("row guarantee p'M >= value violated at column " + std::to_string(j + 1));

    const RVec col_payoffs = mat_vec(g.M, s.q.probs);  // Mq per row
    for (int i = 0; i < g.rows(); ++i)
        if (col_payoffs[i] > s.value)
            rep.fail("column guarantee Mq <= value violated at row " + std::to_string(i + 1));
    return rep;
}

FictitiousPlayResult solve_game_fictitious(const Game& g, long rounds)
{
    if (rounds < 1)
        throw std::invalid_argument("solve_game_fictitious: rounds must be >= 1");

    const int m = g.rows();
    const int n = g.cols();
    std::vector<long> row_count(m), col_count(n);
    RVec row_cum(m);  // payoff of each row action against the column history
    RVec col_cum(n);  // payoff of each column action against the row history

    for (long t = 0; t < rounds; ++t) {
        int bi = 0, bj = 0;
        for (int i = 1; i < m; ++i)
            if (row_cum[i] > row_cum[bi])
                bi = i;
        for (int j = 1; j < n; ++j)
            if (col_cum[j] < col_cum[bj])
                bj = j;
        ++row_count[bi];
        ++col_count[bj];
        for (int i = 0; i < m; ++i)
            row_cum[i] += g.M(i, bj);
        for (int j = 0; j < n; ++j)
            col_cum[j] += g.M(bi, j);
    }

    RVec p(m), q(n);
    for (int i = 0; i < m; ++i)
        p[i] = rat(row_count[i], rounds);
    for (int j = 0; j < n; ++j)
        q[j] = rat(col_count[j], rounds);

    const RVec pM = vec_mat(p, g.M);
    const RVec Mq = mat_vec(g.M, q);
    Rat lower = pM.front();
    for (const Rat& v : pM)
        lower = std::min(lower, v);
    Rat upper = Mq.front();
    for (const Rat& v : Mq)
        upper = std::max(upper, v);

    return FictitiousPlayResult{MixedStrategy{std::move(p)}, MixedStrategy{std::move(q)},
                                lower, upper};
}

}  // namespace lpgame
