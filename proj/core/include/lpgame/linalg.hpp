#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "lpgame/rational.hpp"

namespace lpgame {

using RVec = std::vector<Rat>;

/// Dense row-major rational matrix.
struct RMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RMat() = default;
    RMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c)
    {
        if (r < 0 || c < 0)
            throw std::invalid_argument("RMat: negative dimension");
    }
    RMat(std::initializer_list<std::initializer_list<Rat>> init)
    {
        rows = static_cast<int>(init.size());
        cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
        a.reserve(static_cast<size_t>(rows) * cols);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols)
                throw std::invalid_argument("RMat: ragged initializer");
            a.insert(a.end(), row.begin(), row.end());
        }
    }

    Rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

enum class VecOrder { LE, GE, EQ, Incomparable };

RVec zeros(int n);
RVec ones(int n);
RVec unit(int n, int k);
RMat identity(int n);
RMat transpose(const RMat& M);

RVec mat_vec(const RMat& M, const RVec& v);
RVec vec_mat(const RVec& v, const RMat& M);  // vᵀM as a vector
Rat dot(const RVec& u, const RVec& v);
Rat sum(const RVec& v);
RVec add(const RVec& u, const RVec& v);
RVec sub(const RVec& u, const RVec& v);
RVec scale(const Rat& s, const RVec& v);

VecOrder componentwise_cmp(const RVec& u, const RVec& v);

bool is_nonneg(const RVec& v);
bool is_positive(const RVec& v);
bool is_nonneg(const RMat& M);

}  // namespace lpgame
