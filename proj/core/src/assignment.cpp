#include "lpgame/assignment.hpp"

#include <algorithm>
#include <numeric>

namespace lpgame {

AssignmentInstance::AssignmentInstance(RMat mu_) : mu(std::move(mu_))
{
    if (mu.rows != mu.cols || mu.rows < 1)
        throw std::invalid_argument("AssignmentInstance: surplus matrix must be square");
    if (!is_positive(RVec(mu.a.begin(), mu.a.end())))
        throw std::invalid_argument("AssignmentInstance: surplus must be positive");
}

LPInstance assignment_lp(const AssignmentInstance& a)
{
    const int n = a.n();
    RMat A(2 * n, n * n);
    RVec c(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int col = i * n + j;
            A(i, col) = 1;      // row sum of worker i
            A(n + j, col) = 1;  // column sum of job j
            c[col] = a.mu(i, j);
        }
    return LPInstance(std::move(A), ones(2 * n), std::move(c));
}

HideAndSeekGame hide_and_seek(const AssignmentInstance& a)
{
    const int n = a.n();
    RMat M(2 * n, n * n);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int col = i * n + j;
            M(i, col) = 1 / a.mu(i, j);
            M(n + j, col) = 1 / a.mu(i, j);
            edges.emplace_back(i, j);
        }
    return HideAndSeekGame{std::move(M), std::move(edges)};
}

MixedStrategy matching_to_column_strategy(const AssignmentInstance& a,
                                          const std::vector<int>& sigma)
{
    const int n = a.n();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("matching_to_column_strategy: permutation size mismatch");
    std::vector<bool> seen(n);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("matching_to_column_strategy: not a bijection");
        seen[v] = true;
    }

    Rat total = 0;
    for (int i = 0; i < n; ++i)
        total += a.mu(i, sigma[i]);
    RVec probs(n * n);
    for (int i = 0; i < n; ++i)
        probs[i * n + sigma[i]] = a.mu(i, sigma[i]) / total;
    return mixed_strategy(std::move(probs));
}

Rat max_matching_weight(const AssignmentInstance& a)
{
    const int n = a.n();
    if (n > 8)
        throw std::invalid_argument("max_matching_weight: n > 8 refused");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat best = 0;
    bool first = true;
    do {
        Rat w = 0;
        for (int i = 0; i < n; ++i)
            w += a.mu(i, perm[i]);
        if (first || w > best) {
            best = w;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

HideAndSeekCheck check_hide_and_seek_value(const AssignmentInstance& a)
{
    const Rat weight = max_matching_weight(a);
    const GameSolution sol = solve_game(Game(hide_and_seek(a).M));
    return HideAndSeekCheck{sol.value, weight, sol.value == 1 / weight};
}

}  // namespace lpgame
