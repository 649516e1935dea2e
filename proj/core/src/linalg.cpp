#include "lpgame/linalg.hpp"

namespace lpgame {

RVec zeros(int n) { return RVec(n); }

RVec ones(int n) { return RVec(n, Rat(1)); }

RVec unit(int n, int k)
{
    RVec e(n);
    e.at(k) = 1;
    return e;
}

RMat identity(int n)
{
    RMat I(n, n);
    for (int i = 0; i < n; ++i)
        I(i, i) = 1;
    return I;
}

RMat transpose(const RMat& M)
{
    RMat T(M.cols, M.rows);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
            T(j, i) = M(i, j);
    return T;
}

RVec mat_vec(const RMat& M, const RVec& v)
{
    if (M.cols != static_cast<int>(v.size()))
        throw std::invalid_argument("mat_vec: dimension mismatch");
    RVec out(M.rows);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
            out[i] += M(i, j) * v[j];
    return out;
}

RVec vec_mat(const RVec& v, const RMat& M)
{
    if (M.rows != static_cast<int>(v.size()))
        throw std::invalid_argument("vec_mat: dimension mismatch");
    RVec out(M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
            out[j] += v[i] * M(i, j);
    return out;
}

Rat dot(const RVec& u, const RVec& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (size_t k = 0; k < u.size(); ++k)
        s += u[k] * v[k];
    return s;
}

Rat sum(const RVec& v)
{
    Rat s = 0;
    for (const Rat& x : v)
        s += x;
    return s;
}

RVec add(const RVec& u, const RVec& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("add: dimension mismatch");
    RVec out(u.size());
    for (size_t k = 0; k < u.size(); ++k)
        out[k] = u[k] + v[k];
    return out;
}

RVec sub(const RVec& u, const RVec& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("sub: dimension mismatch");
    RVec out(u.size());
    for (size_t k = 0; k < u.size(); ++k)
        out[k] = u[k] - v[k];
    return out;
}

RVec scale(const Rat& s, const RVec& v)
{
    RVec out(v.size());
    for (size_t k = 0; k < v.size(); ++k)
        out[k] = s * v[k];
    return out;
}

VecOrder componentwise_cmp(const RVec& u, const RVec& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("componentwise_cmp: dimension mismatch");
    bool le = true, ge = true;
    for (size_t k = 0; k < u.size(); ++k) {
        if (u[k] > v[k]) le = false;
        if (u[k] < v[k]) ge = false;
    }
    if (le && ge) return VecOrder::EQ;
    if (le) return VecOrder::LE;
    if (ge) return VecOrder::GE;
    return VecOrder::Incomparable;
}

bool is_nonneg(const RVec& v)
{
    for (const Rat& x : v)
        if (x < 0) return false;
    return true;
}

bool is_positive(const RVec& v)
{
    for (const Rat& x : v)
        if (x <= 0) return false;
    return true;
}

bool is_nonneg(const RMat& M)
{
    for (const Rat& x : M.a)
        if (x < 0) return false;
    return true;
}

}  // namespace lpgame
