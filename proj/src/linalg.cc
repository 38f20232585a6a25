// Copyright 2026 The qss-rec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/linalg.h"

#include <numeric>
#include <stdexcept>

namespace qss::linalg {

RowEchelon row_reduce(const Field &field, Rows rows, size_t ncols, const std::vector<size_t> &column_order) {
    std::vector<size_t> order = column_order;
    if (order.empty()) {
        order.resize(ncols);
        std::iota(order.begin(), order.end(), 0);
    }
    if (order.size() != ncols) {
        throw std::invalid_argument("column order does not cover every column");
    }
    for (const auto &r : rows) {
        if (r.size() != ncols) {
            throw std::invalid_argument("row length mismatch in row_reduce");
        }
    }

    RowEchelon out;
    size_t top = 0;
    for (size_t col : order) {
        size_t pivot = top;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[top], rows[pivot]);
        FieldValue scale = field.inv(rows[top][col]);
        for (auto &e : rows[top]) {
            e = field.mul(e, scale);
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == top || rows[r][col] == 0) {
                continue;
            }
            FieldValue factor = rows[r][col];
            for (size_t c = 0; c < ncols; c++) {
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[top][c]));
            }
        }
        out.pivots.push_back(col);
        top++;
        if (top == rows.size()) {
            break;
        }
    }
    rows.resize(top);
    out.rows = std::move(rows);
    return out;
}

size_t rank(const Field &field, const Rows &rows, size_t ncols) {
    return row_reduce(field, rows, ncols).rows.size();
}

Rows nullspace(const Field &field, const Rows &rows, size_t ncols) {
    RowEchelon e = row_reduce(field, rows, ncols);
    std::vector<int> pivot_row(ncols, -1);
    for (size_t r = 0; r < e.pivots.size(); r++) {
        pivot_row[e.pivots[r]] = static_cast<int>(r);
    }
    Rows basis;
    for (size_t free_col = 0; free_col < ncols; free_col++) {
        if (pivot_row[free_col] >= 0) {
            continue;
        }
        Row x(ncols, 0);
        x[free_col] = 1;
        for (size_t r = 0; r < e.pivots.size(); r++) {
            x[e.pivots[r]] = field.neg(e.rows[r][free_col]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Row> solve(const Field &field, const Rows &rows, const Row &rhs, size_t ncols) {
    if (rhs.size() != rows.size()) {
        throw std::invalid_argument("right-hand side length mismatch in solve");
    }
    Rows augmented;
    augmented.reserve(rows.size());
    for (size_t r = 0; r < rows.size(); r++) {
        Row a = rows[r];
        a.push_back(rhs[r]);
        augmented.push_back(std::move(a));
    }
    RowEchelon e = row_reduce(field, std::move(augmented), ncols + 1);
    Row x(ncols, 0);
    for (size_t r = 0; r < e.pivots.size(); r++) {
        if (e.pivots[r] == ncols) {
            return std::nullopt;
        }
        x[e.pivots[r]] = e.rows[r][ncols];
    }
    return x;
}

bool in_row_space(const Field &field, const RowEchelon &echelon, const Row &v) {
    Row residual = v;
    for (size_t r = 0; r < echelon.rows.size(); r++) {
        FieldValue c = residual[echelon.pivots[r]];
        if (c == 0) {
            continue;
        }
        for (size_t i = 0; i < residual.size(); i++) {
            residual[i] = field.sub(residual[i], field.mul(c, echelon.rows[r][i]));
        }
    }
    for (auto e : residual) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace qss::linalg
