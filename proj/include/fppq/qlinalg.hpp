#pragma once

#include "fppq/rational.hpp"

#include <optional>
#include <vector>

namespace fppq {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using IVec = std::vector<BigInt>;
using IMat = std::vector<IVec>;

inline QMat q_identity(std::size_t n) {
    QMat m(n, QVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QMat to_rational(const IMat& a) {
    QMat m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = QVec(a[i].begin(), a[i].end());
    return m;
}

inline Rational dot(const QVec& x, const QVec& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline QVec mat_vec(const QMat& a, const QVec& x) {
    QVec y(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
    return y;
}

// x^T A y, the bilinear form of a symmetric matrix
inline Rational bilinear(const QMat& a, const QVec& x, const QVec& y) {
    return dot(x, mat_vec(a, y));
}

// Exact Gaussian elimination; nullopt when the matrix is singular.
inline std::optional<QVec> solve_linear(QMat a, QVec b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

}  // namespace fppq
