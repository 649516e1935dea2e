#include "lpgame/nonneg.hpp"

#include <algorithm>

#include "lpgame/dantzig.hpp"
#include "lpgame/reduction.hpp"

namespace lpgame {

bool IndexSets::row_removed(int i) const
{
    return std::binary_search(I0.begin(), I0.end(), i);
}

bool IndexSets::col_removed(int j) const
{
    return std::binary_search(J0.begin(), J0.end(), j) ||
           std::binary_search(J.begin(), J.end(), j);
}

IndexSets index_sets(const LPInstance& lp)
{
    IndexSets sets;
    for (int i = 0; i < lp.m(); ++i)
        if (lp.b[i] == 0)
            sets.I0.push_back(i);
    for (int j = 0; j < lp.n(); ++j) {
        for (int i : sets.I0)
            if (lp.A(i, j) > 0) {
                sets.J0.push_back(j);
                break;
            }
        if (lp.c[j] <= 0)
            sets.J.push_back(j);
    }
    sets.bigM = 0;
    for (int j : sets.J0)
        for (int i : sets.I0)
            if (lp.A(i, j) > 0) {
                const Rat ratio = lp.c[j] / lp.A(i, j);
                if (ratio > sets.bigM)
                    sets.bigM = ratio;
            }
    return sets;
}

namespace {

void require_nonneg_matrix(const LPInstance& lp, const char* who)
{
    if (!is_nonneg(lp.A))
        throw std::invalid_argument(std::string(who) + ": A has a negative entry");
}

LPOutcome checked(const LPInstance& lp, LPOutcome out, const char* stage)
{
    if (!verify_outcome(lp, out))
        throw std::logic_error(std::string(stage) + ": outcome failed verification");
    return out;
}

}  // namespace

std::variant<LPOutcome, RestrictedLP> preprocess(const LPInstance& lp)
{
    require_nonneg_matrix(lp, "preprocess");
    const int m = lp.m();
    const int n = lp.n();

    for (int i = 0; i < m; ++i)
        if (lp.b[i] < 0)
            return checked(lp, InfeasibilityCert{unit(m, i)}, "preprocess");

    const IndexSets sets = index_sets(lp);

    for (int j = 0; j < n; ++j) {
        if (std::binary_search(sets.J.begin(), sets.J.end(), j))
            continue;
        bool zero_col = true;
        for (int i = 0; i < m; ++i)
            if (lp.A(i, j) != 0) {
                zero_col = false;
                break;
            }
        if (zero_col)
            return checked(lp, UnboundednessCert{unit(n, j), zeros(n)}, "preprocess");
    }

    int removed_cols = 0;
    for (int j = 0; j < n; ++j)
        if (sets.col_removed(j))
            ++removed_cols;

    if (static_cast<int>(sets.I0.size()) == m || removed_cols == n) {
        RVec y(m);
        for (int i : sets.I0)
            y[i] = sets.bigM;
        return checked(lp, OptimalPair{zeros(n), std::move(y), Rat(0)}, "preprocess");
    }

    const int hm = m - static_cast<int>(sets.I0.size());
    int hn = 0;
    std::vector<int> keep_cols;
    for (int j = 0; j < n; ++j)
        if (!sets.col_removed(j)) {
            keep_cols.push_back(j);
            ++hn;
        }
    RMat Ah(hm, hn);
    RVec bh(hm), ch(hn);
    int ri = 0;
    for (int i = 0; i < m; ++i) {
        if (sets.row_removed(i))
            continue;
        for (int jj = 0; jj < hn; ++jj)
            Ah(ri, jj) = lp.A(i, keep_cols[jj]);
        bh[ri] = lp.b[i];
        ++ri;
    }
    for (int jj = 0; jj < hn; ++jj)
        ch[jj] = lp.c[keep_cols[jj]];

    return RestrictedLP{LPInstance(std::move(Ah), std::move(bh), std::move(ch)),
                        sets, m, n};
}

LPOutcome postprocess(const LPInstance& lp, const RestrictedLP& r,
                      const LPOutcome& hat_outcome)
{
    if (std::holds_alternative<InfeasibilityCert>(hat_outcome))
        throw std::invalid_argument("postprocess: restricted pair is never infeasible");

    std::vector<int> keep_cols;
    for (int j = 0; j < r.orig_n; ++j)
        if (!r.sets.col_removed(j))
            keep_cols.push_back(j);

    const auto expand_cols = [&](const RVec& v) {
        RVec out(r.orig_n);
        for (size_t k = 0; k < keep_cols.size(); ++k)
            out[keep_cols[k]] = v[k];
        return out;
    };

    if (const auto* opt = std::get_if<OptimalPair>(&hat_outcome)) {
        RVec y(r.orig_m);
        int ri = 0;
        for (int i = 0; i < r.orig_m; ++i)
            y[i] = r.sets.row_removed(i) ? r.sets.bigM : opt->y[ri++];
        return checked(lp, OptimalPair{expand_cols(opt->x), std::move(y), opt->value},
                       "postprocess");
    }
    const auto& unb = std::get<UnboundednessCert>(hat_outcome);
    std::optional<RVec> witness;
    if (unb.feasible_witness)
        witness = expand_cols(*unb.feasible_witness);
    return checked(lp, UnboundednessCert{expand_cols(unb.w), std::move(witness)},
                   "postprocess");
}

LPOutcome solve_nonneg_lp(const LPInstance& lp, Engine engine)
{
    require_nonneg_matrix(lp, "solve_nonneg_lp");
    auto pre = preprocess(lp);
    if (auto* out = std::get_if<LPOutcome>(&pre))
        return std::move(*out);

    const auto& r = std::get<RestrictedLP>(pre);
    const LPOutcome hat_out = engine == Engine::VonNeumann
                                  ? solve_positive_lp(r.hat)
                                  : solve_lp_via_dantzig(r.hat);
    return postprocess(lp, r, hat_out);
}

std::optional<int> zero_column_unbounded_check(const LPInstance& lp)
{
    require_nonneg_matrix(lp, "zero_column_unbounded_check");
    if (!is_nonneg(lp.b))
        throw std::invalid_argument("zero_column_unbounded_check: requires b >= 0");

    for (int j = 0; j < lp.n(); ++j) {
        if (lp.c[j] <= 0)
            continue;
        bool zero_col = true;
        for (int i = 0; i < lp.m(); ++i)
            if (lp.A(i, j) != 0) {
                zero_col = false;
                break;
            }
        if (zero_col)
            return j;
    }
    return std::nullopt;
}

}  // namespace lpgame
