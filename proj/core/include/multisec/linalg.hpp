/*
   Copyright 2026 The multisec authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <vector>

#include "multisec/arith.hpp"

namespace multisec {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// In-place row echelon reduction; returns the pivot columns.
template <class K>
std::vector<int> row_echelon(Matrix<K>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw error("row_echelon: ragged matrix");
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        K inv = one_like(m[row][col]) / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] = inv * m[row][j];
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || is_zero(m[i][col])) continue;
            K factor = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - factor * m[row][j];
        }
        pivots.push_back(int(col));
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Matrix<K> m) {
    return int(row_echelon(m).size());
}

// Basis of the right kernel {x : m x = 0}; each vector has length cols.
// A zero sample of the field provides context for free columns.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m, const K& zero, const K& one) {
    if (m.empty()) throw error("nullspace: empty matrix");
    const size_t cols = m[0].size();
    std::vector<int> pivots = row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    std::vector<std::vector<K>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(cols, zero);
        v[free_col] = one;
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            size_t pcol = size_t(pivots[pi]);
            if (pcol < free_col) v[pcol] = -m[pi][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// True when the column space has full column rank.
template <class K>
bool full_column_rank(const Matrix<K>& m) {
    if (m.empty()) return true;
    return rank(m) == int(m[0].size());
}

}  // namespace multisec
