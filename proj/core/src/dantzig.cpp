#include "lpgame/dantzig.hpp"

namespace lpgame {

DantzigGame dantzig_matrix(const LPInstance& lp)
{
    const int m = lp.m();
    const int n = lp.n();
    RMat K(m + n + 1, m + n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            K(i, m + j) = lp.A(i, j);
            K(m + j, i) = -lp.A(i, j);
        }
        K(i, m + n) = -lp.b[i];
        K(m + n, i) = lp.b[i];
    }
    for (int j = 0; j < n; ++j) {
        K(m + j, m + n) = lp.c[j];
        K(m + n, m + j) = -lp.c[j];
    }
    return DantzigGame{std::move(K), lp};
}

VerifyReport verify_dantzig_strategy(const DantzigGame& g, const DantzigStrategy& s)
{
    const LPInstance& lp = g.source;
    if (static_cast<int>(s.p.size()) != lp.m() || static_cast<int>(s.q.size()) != lp.n())
        throw std::invalid_argument("verify_dantzig_strategy: dimension mismatch");

    VerifyReport rep;
    if (!is_nonneg(s.p) || !is_nonneg(s.q) || s.t < 0)
        rep.fail("p, q, t >= 0");
    if (sum(s.p) + sum(s.q) + s.t != 1)
        rep.fail("1'p + 1'q + t = 1");

    const RVec Aq = mat_vec(lp.A, s.q);
    for (int i = 0; i < lp.m(); ++i)
        if (Aq[i] - lp.b[i] * s.t > 0)
            rep.fail("Aq - bt <= 0 violated at row " + std::to_string(i + 1));

    const RVec Atp = vec_mat(s.p, lp.A);
    for (int j = 0; j < lp.n(); ++j)
        if (-Atp[j] + lp.c[j] * s.t > 0)
            rep.fail("-A'p + ct <= 0 violated at column " + std::to_string(j + 1));

    const Rat gap = dot(lp.b, s.p) - dot(lp.c, s.q);
    if (gap > 0)
        rep.fail("b'p - c'q <= 0");
    if (s.t * gap != 0)
        rep.fail("complementarity t(b'p - c'q) = 0");
    return rep;
}

namespace {

DantzigStrategy require_verified(const LPInstance& lp, const DantzigStrategy& s,
                                 const char* who)
{
    const DantzigGame g = dantzig_matrix(lp);
    const auto rep = verify_dantzig_strategy(g, s);
    if (!rep)
        throw std::invalid_argument(std::string(who) + ": strategy is not maximin: " +
                                    (rep.violations.empty() ? std::string()
                                                            : rep.violations.front()));
    return s;
}

}  // namespace

std::variant<LPOutcome, Hole> extract_classic(const LPInstance& lp,
                                              const DantzigStrategy& s)
{
    require_verified(lp, s, "extract_classic");

    if (s.t > 0) {
        RVec x = scale(1 / s.t, s.q);
        RVec y = scale(1 / s.t, s.p);
        Rat value = dot(lp.c, x);
        LPOutcome out{OptimalPair{std::move(x), std::move(y), std::move(value)}};
        if (!verify_outcome(lp, out))
            throw std::logic_error("extract_classic: optimal pair failed verification");
        return out;
    }

    const Rat gap = dot(lp.b, s.p) - dot(lp.c, s.q);
    if (gap < 0) {
        // Either p* certifies primal infeasibility or q* certifies
        // unboundedness; prefer the infeasibility certificate when both hold.
        LPOutcome inf{InfeasibilityCert{s.p}};
        if (verify_outcome(lp, inf))
            return inf;
        LPOutcome unb{UnboundednessCert{s.q, std::nullopt}};
        if (verify_outcome(lp, unb))
            return unb;
        throw std::logic_error("extract_classic: neither certificate verifies");
    }
    return Hole{};
}

LPOutcome extract_positive(const LPInstance& lp, const DantzigStrategy& s)
{
    if (!is_positive(lp.b) || !is_positive(lp.c))
        throw std::invalid_argument("extract_positive: requires b > 0 and c > 0");
    require_verified(lp, s, "extract_positive");

    LPOutcome out = [&]() -> LPOutcome {
        if (s.t > 0) {
            RVec x = scale(1 / s.t, s.q);
            RVec y = scale(1 / s.t, s.p);
            Rat value = dot(lp.c, x);
            return OptimalPair{std::move(x), std::move(y), std::move(value)};
        }
        // t* = 0 forces q* != 0 here, so q* is a ray; x = 0 is feasible.
        return UnboundednessCert{s.q, zeros(lp.n())};
    }();
    if (!verify_outcome(lp, out))
        throw std::logic_error("extract_positive: outcome failed verification");
    return out;
}

DantzigStrategy solve_dantzig_game(const DantzigGame& g)
{
    const GameSolution sol = solve_game(Game(g.K));
    if (sol.value != 0)
        throw std::logic_error("solve_dantzig_game: skew-symmetric game value must be 0");
    const int m = g.source.m();
    const int n = g.source.n();
    const RVec& s = sol.p.probs;
    return DantzigStrategy{
        RVec(s.begin(), s.begin() + m),
        RVec(s.begin() + m, s.begin() + m + n),
        s[m + n],
    };
}

LPOutcome solve_lp_via_dantzig(const LPInstance& lp)
{
    if (!is_positive(lp.b) || !is_positive(lp.c))
        throw std::invalid_argument("solve_lp_via_dantzig: requires b > 0 and c > 0");
    const DantzigGame g = dantzig_matrix(lp);
    return extract_positive(lp, solve_dantzig_game(g));
}

}  // namespace lpgame
