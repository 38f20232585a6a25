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

#ifndef QSS_LINALG_H
#define QSS_LINALG_H

#include <optional>
#include <vector>

#include "qss/gf.h"

namespace qss::linalg {

using Row = std::vector<FieldValue>;
using Rows = std::vector<Row>;

struct RowEchelon {
    Rows rows;                  // reduced rows, pivot entries equal to 1
    std::vector<size_t> pivots; // pivot column of each row
};

/// Reduced row-echelon form over `field`. Zero rows are dropped. Columns are
/// eliminated in the order given by `column_order` (defaults to 0..ncols-1);
/// the result is canonical for the row space under that order.
RowEchelon row_reduce(const Field &field, Rows rows, size_t ncols,
                      const std::vector<size_t> &column_order = {});

size_t rank(const Field &field, const Rows &rows, size_t ncols);

/// Basis of {x : A x = 0} where A has the given rows.
Rows nullspace(const Field &field, const Rows &rows, size_t ncols);

/// Some x with A x = b, or nullopt if the system is inconsistent.
std::optional<Row> solve(const Field &field, const Rows &rows, const Row &rhs, size_t ncols);

/// True if v lies in the row space of an echelon form (column order 0..n-1).
bool in_row_space(const Field &field, const RowEchelon &echelon, const Row &v);

}  // namespace qss::linalg

#endif
