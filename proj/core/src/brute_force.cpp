#include "lpgame/brute_force.hpp"

#include <optional>

namespace lpgame {

namespace {

std::optional<RVec> solve_square(RMat M, RVec rhs)
{
    const int n = M.rows;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (M(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            return std::nullopt;  // singular
        if (piv != col) {
            for (int j = 0; j < n; ++j)
                std::swap(M(col, j), M(piv, j));
            std::swap(rhs[col], rhs[piv]);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || M(i, col) == 0)
                continue;
            const Rat f = M(i, col) / M(col, col);
            for (int j = col; j < n; ++j)
                M(i, j) -= f * M(col, j);
            rhs[i] -= f * rhs[col];
        }
    }
    RVec x(n);
    for (int i = 0; i < n; ++i)
        x[i] = rhs[i] / M(i, i);
    return x;
}

long binomial_capped(int nn, int kk, long cap)
{
    long r = 1;
    for (int i = 1; i <= kk; ++i) {
        r = r * (nn - kk + i) / i;
        if (r > cap)
            return cap + 1;
    }
    return r;
}

/// All basic feasible solutions of {v >= 0 : Gv + s = h, s >= 0},
/// projected to the first G.cols components.
std::vector<RVec> enumerate_bfs(const RMat& G, const RVec& h, long max_bases)
{
    const int r = G.rows;
    const int k = G.cols;
    const int total = k + r;
    if (binomial_capped(total, r, max_bases) > max_bases)
        throw std::invalid_argument("brute_force_lp: instance too large for enumeration");

    std::vector<RVec> out;
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i)
        pick[i] = i;
    for (;;) {
        RMat B(r, r);
        for (int i = 0; i < r; ++i)
            for (int jj = 0; jj < r; ++jj) {
                const int col = pick[jj];
                B(i, jj) = col < k ? G(i, col) : Rat(col - k == i ? 1 : 0);
            }
        if (auto sol = solve_square(std::move(B), h)) {
            if (is_nonneg(*sol)) {
                RVec v(k);
                for (int jj = 0; jj < r; ++jj)
                    if (pick[jj] < k)
                        v[pick[jj]] = (*sol)[jj];
                out.push_back(std::move(v));
            }
        }
        // next combination
        int i = r - 1;
        while (i >= 0 && pick[i] == total - r + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace

LPOutcome brute_force_lp(const LPInstance& lp, long max_bases)
{
    const int m = lp.m();
    const int n = lp.n();

    const std::vector<RVec> vertices = enumerate_bfs(lp.A, lp.b, max_bases);

    if (vertices.empty()) {
        // Farkas alternative: find a vertex of {z >= 0 : -A'z <= 0, b'z <= -1}.
        RMat G(n + 1, m);
        RVec h(n + 1);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i)
                G(j, i) = -lp.A(i, j);
        for (int i = 0; i < m; ++i)
            G(n, i) = lp.b[i];
        h[n] = -1;
        const auto zs = enumerate_bfs(G, h, max_bases);
        if (zs.empty())
            throw std::logic_error("brute_force_lp: no vertex and no Farkas certificate");
        LPOutcome out{InfeasibilityCert{zs.front()}};
        if (!verify_outcome(lp, out))
            throw std::logic_error("brute_force_lp: infeasibility certificate invalid");
        return out;
    }

    // Rays: vertices of the truncated recession cone {Aw <= 0, w <= 1, w >= 0}.
    {
        RMat G(m + n, n);
        RVec h(m + n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                G(i, j) = lp.A(i, j);
        for (int j = 0; j < n; ++j) {
            G(m + j, j) = 1;
            h[m + j] = 1;
        }
        for (const RVec& w : enumerate_bfs(G, h, max_bases)) {
            if (dot(lp.c, w) > 0) {
                LPOutcome out{UnboundednessCert{w, vertices.front()}};
                if (!verify_outcome(lp, out))
                    throw std::logic_error("brute_force_lp: ray invalid");
                return out;
            }
        }
    }

    // Bounded: the optimum is attained at a vertex.
    const RVec* best = &vertices.front();
    Rat best_val = dot(lp.c, *best);
    for (const RVec& v : vertices) {
        const Rat val = dot(lp.c, v);
        if (val > best_val) {
            best_val = val;
            best = &v;
        }
    }

    // Dual optimum by the same enumeration on {y >= 0 : -A'y <= -c}.
    RMat G(n, m);
    RVec h(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i)
            G(j, i) = -lp.A(i, j);
        h[j] = -lp.c[j];
    }
    const auto duals = enumerate_bfs(G, h, max_bases);
    const RVec* best_dual = nullptr;
    Rat dual_val;
    for (const RVec& y : duals) {
        const Rat val = dot(lp.b, y);
        if (!best_dual || val < dual_val) {
            dual_val = val;
            best_dual = &y;
        }
    }
    if (!best_dual || dual_val != best_val)
        throw std::logic_error("brute_force_lp: primal and dual enumeration disagree");

    LPOutcome out{OptimalPair{*best, *best_dual, best_val}};
    if (!verify_outcome(lp, out))
        throw std::logic_error("brute_force_lp: optimal pair invalid");
    return out;
}

}  // namespace lpgame
