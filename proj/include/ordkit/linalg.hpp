#pragma once

#include <optional>
#include <vector>

#include "ordkit/rational.hpp"

namespace ordkit {

using QVec = std::vector<Rat>;
using QMatrix = std::vector<QVec>;
using ZVec = std::vector<Int>;
using ZMatrix = std::vector<ZVec>;

// Reduced row echelon form in place; returns pivot column per row.
inline std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size(), QVec(cols, Rat(0)));
    return pivots;
}

// Solves sum_i a_i * col_i = b for columns with full column rank; nullopt if
// inconsistent.
inline std::optional<QVec> solve_columns(const std::vector<QVec>& cols, const QVec& b) {
    size_t n = b.size(), k = cols.size();
    QMatrix aug(n, QVec(k + 1, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = cols[j][i];
        aug[i][k] = b[i];
    }
    auto pivots = rref(aug);
    QVec x(k, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == static_cast<int>(k)) return std::nullopt;  // 0 = 1 row
        x[pivots[r]] = aug[r][k];
    }
    // full column rank expected; verify to be safe against dependent columns
    for (size_t i = 0; i < n; ++i) {
        Rat acc(0);
        for (size_t j = 0; j < k; ++j) acc += x[j] * cols[j][i];
        if (acc != b[i]) return std::nullopt;
    }
    return x;
}

// Nullspace basis of m (rows x cols), one vector per free column.
inline std::vector<QVec> nullspace(QMatrix m) {
    if (m.empty()) return {};
    int cols = static_cast<int>(m[0].size());
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rat(0));
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Row-style Hermite normal form: integer row operations only, pivots
// positive, zeros below pivots, entries above reduced into [0, pivot).
// Returns the nonzero rows; unique for a given row lattice.
inline ZMatrix hnf_rows(ZMatrix m) {
    if (m.empty()) return m;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // clear the column below row r by repeated division steps
        for (;;) {
            int best = -1;
            for (int i = r; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                if (best < 0 || ::abs(m[i][c]) < ::abs(m[best][c])) best = i;
            }
            if (best < 0) break;
            std::swap(m[r], m[best]);
            bool done = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
                for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
            if (q != 0)
                for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

}  // namespace ordkit
