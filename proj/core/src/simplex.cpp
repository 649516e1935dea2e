#include "lpgame/simplex.hpp"

#include <algorithm>

namespace lpgame {

namespace {

// Dense tableau over the constraint system Ax + s = b with variables
// x (0..n-1), slacks s (n..n+m-1) and, during phase 1, one auxiliary
// variable. Row i holds the expression of basic variable basis[i] in terms
// of the nonbasic variables; the objective row d keeps reduced costs of a
// maximization objective.
class Tableau {
public:
    Tableau(const LPInstance& lp, bool with_aux)
        : m_(lp.m()), n_(lp.n()),
          nv_(lp.n() + lp.m() + (with_aux ? 1 : 0)),
          aux_(with_aux ? lp.n() + lp.m() : -1),
          t_(m_, nv_), rhs_(m_), basis_(m_), d_(nv_)
    {
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j)
                t_(i, j) = lp.A(i, j);
            t_(i, n_ + i) = 1;
            if (with_aux)
                t_(i, aux_) = -1;
            rhs_[i] = lp.b[i];
            basis_[i] = n_ + i;
        }
    }

    int aux() const { return aux_; }

    bool is_basic(int col) const
    {
        return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
    }

    int basic_row(int col) const
    {
        for (int i = 0; i < m_; ++i)
            if (basis_[i] == col)
                return i;
        return -1;
    }

    void pivot(int row, int col)
    {
        const Rat piv = t_(row, col);
        for (int j = 0; j < nv_; ++j)
            t_(row, j) /= piv;
        rhs_[row] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == row || t_(i, col) == 0)
                continue;
            const Rat f = t_(i, col);
            for (int j = 0; j < nv_; ++j)
                t_(i, j) -= f * t_(row, j);
            rhs_[i] -= f * rhs_[row];
        }
        if (d_[col] != 0) {
            const Rat f = d_[col];
            for (int j = 0; j < nv_; ++j)
                d_[j] -= f * t_(row, j);
            obj_const_ += f * rhs_[row];
        }
        basis_[row] = col;
    }

    /// Installs a fresh objective (maximize obj_const + Σ cost_j v_j) and
    /// prices out the current basis.
    void set_objective(const RVec& cost)
    {
        d_ = cost;
        d_.resize(nv_);
        obj_const_ = 0;
        for (int i = 0; i < m_; ++i) {
            const Rat f = d_[basis_[i]];
            if (f == 0)
                continue;
            for (int j = 0; j < nv_; ++j)
                d_[j] -= f * t_(i, j);
            obj_const_ += f * rhs_[i];
        }
    }

    enum class Status { Optimal, Unbounded };

    /// Bland's rule simplex loop; `banned` columns never enter.
    Status run(int banned, int* unbounded_col)
    {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < nv_; ++j) {
                if (j == banned || is_basic(j))
                    continue;
                if (d_[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return Status::Optimal;

            int leave = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                if (t_(i, enter) <= 0)
                    continue;
                const Rat ratio = rhs_[i] / t_(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) {
                if (unbounded_col)
                    *unbounded_col = enter;
                return Status::Unbounded;
            }
            pivot(leave, enter);
        }
    }

    Rat objective() const { return obj_const_; }

    /// Current basic solution restricted to the original x variables.
    RVec x_solution() const
    {
        RVec x(n_);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                x[basis_[i]] = rhs_[i];
        return x;
    }

    /// Dual values read off the slack reduced costs: y_i = -d_{slack i}.
    RVec dual_from_slacks() const
    {
        RVec y(m_);
        for (int i = 0; i < m_; ++i)
            y[i] = -d_[n_ + i];
        return y;
    }

    /// Recession direction over the original x variables for an entering
    /// column whose tableau column is nonpositive.
    RVec ray(int enter) const
    {
        RVec w(n_);
        if (enter < n_)
            w[enter] = 1;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                w[basis_[i]] = -t_(i, enter);
        return w;
    }

    int most_negative_rhs_row() const
    {
        int r = -1;
        for (int i = 0; i < m_; ++i)
            if (rhs_[i] < 0 && (r < 0 || rhs_[i] < rhs_[r]))
                r = i;
        return r;
    }

    const Rat& entry(int i, int j) const { return t_(i, j); }

private:
    int m_, n_, nv_, aux_;
    RMat t_;
    RVec rhs_;
    std::vector<int> basis_;
    RVec d_;
    Rat obj_const_ = 0;
};

LPOutcome finish_phase2(const LPInstance& lp, Tableau& tab)
{
    RVec cost(lp.n() + lp.m() + (tab.aux() >= 0 ? 1 : 0));
    for (int j = 0; j < lp.n(); ++j)
        cost[j] = lp.c[j];
    tab.set_objective(cost);

    int unbounded_col = -1;
    const auto status = tab.run(tab.aux(), &unbounded_col);
    if (status == Tableau::Status::Optimal) {
        OptimalPair opt{tab.x_solution(), tab.dual_from_slacks(), tab.objective()};
        return LPOutcome{std::move(opt)};
    }
    UnboundednessCert unb{tab.ray(unbounded_col), tab.x_solution()};
    return LPOutcome{std::move(unb)};
}

}  // namespace

LPOutcome solve_lp(const LPInstance& lp)
{
    const bool need_phase1 = !is_nonneg(lp.b);
    Tableau tab(lp, need_phase1);

    if (need_phase1) {
        RVec aux_cost(lp.n() + lp.m() + 1);
        aux_cost[tab.aux()] = -1;  // maximize -x0
        tab.set_objective(aux_cost);
        tab.pivot(tab.most_negative_rhs_row(), tab.aux());
        tab.run(-1, nullptr);

        if (tab.objective() < 0) {
            InfeasibilityCert cert{tab.dual_from_slacks()};
            LPOutcome out{std::move(cert)};
            if (!verify_outcome(lp, out))
                throw std::logic_error("solve_lp: phase-1 certificate failed verification");
            return out;
        }
        // Drive the auxiliary variable out of a degenerate basis if possible.
        const int row = tab.basic_row(tab.aux());
        if (row >= 0) {
            for (int j = 0; j < lp.n() + lp.m(); ++j) {
                if (!tab.is_basic(j) && tab.entry(row, j) != 0) {
                    tab.pivot(row, j);
                    break;
                }
            }
        }
    }

    LPOutcome out = finish_phase2(lp, tab);
    if (!verify_outcome(lp, out))
        throw std::logic_error("solve_lp: outcome failed verification");
    return out;
}

}  // namespace lpgame
