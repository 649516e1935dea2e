#pragma once

#include <random>

#include "lpgame/lp.hpp"

namespace lpgame::testutil {

using Rng = std::mt19937;

inline Rat random_int_rat(Rng& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    return Rat(dist(rng));
}

inline RVec random_vec(Rng& rng, int dim, int lo, int hi)
{
    RVec v(dim);
    for (Rat& x : v)
        x = random_int_rat(rng, lo, hi);
    return v;
}

inline RMat random_mat(Rng& rng, int rows, int cols, int lo, int hi)
{
    RMat M(rows, cols);
    for (Rat& x : M.a)
        x = random_int_rat(rng, lo, hi);
    return M;
}

/// Random instance with b, c strictly positive integers.
inline LPInstance random_positive_lp(Rng& rng, int max_dim, int entry_bound)
{
    std::uniform_int_distribution<int> dim(1, max_dim);
    const int m = dim(rng);
    const int n = dim(rng);
    return LPInstance(random_mat(rng, m, n, -entry_bound, entry_bound),
                      random_vec(rng, m, 1, entry_bound),
                      random_vec(rng, n, 1, entry_bound));
}

/// Random instance with A >= 0 and arbitrary-sign b, c.
inline LPInstance random_nonneg_lp(Rng& rng, int max_dim, int entry_bound)
{
    std::uniform_int_distribution<int> dim(1, max_dim);
    const int m = dim(rng);
    const int n = dim(rng);
    return LPInstance(random_mat(rng, m, n, 0, entry_bound),
                      random_vec(rng, m, -entry_bound, entry_bound),
                      random_vec(rng, n, -entry_bound, entry_bound));
}

/// Fully random small instance.
inline LPInstance random_lp(Rng& rng, int max_dim, int entry_bound)
{
    std::uniform_int_distribution<int> dim(1, max_dim);
    const int m = dim(rng);
    const int n = dim(rng);
    return LPInstance(random_mat(rng, m, n, -entry_bound, entry_bound),
                      random_vec(rng, m, -entry_bound, entry_bound),
                      random_vec(rng, n, -entry_bound, entry_bound));
}

}  // namespace lpgame::testutil
