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

#ifndef QSS_ORACLE_H
#define QSS_ORACLE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qss/qstate.h"
#include "qss/symplectic.h"

namespace qss {

class BudgetExceededError : public std::runtime_error {
   public:
    explicit BudgetExceededError(const std::string &what) : std::runtime_error(what) {}
};

/// log2 of the largest enumeration the brute-force checks will attempt.
constexpr double kEnumerationBudgetBits = 24.0;

/// Exhaustive check that every error supported on `erased` with zero syndrome
/// lies in C. Syndromes use the raw generators and membership in C is decided
/// against the enumerated span of the raw generators, so no row reduction is
/// involved. Throws BudgetExceededError past 2^24 candidates.
bool brute_force_erasure_check(const StabilizerCode &code, const IndexSet &erased);

/// Probe secrets: every computational basis secret, then for each pair i < j
/// the superpositions (|i> + |j>)/sqrt2 and (|i> + i|j>)/sqrt2.
std::vector<QuditState> probe_secrets(int q, size_t k);

/// True iff the reduced states on `holders` agree within tol for every pair of
/// probe secrets.
bool forbidden_check_by_state(const CodewordFamily &codewords, const IndexSet &holders, double tol = kDefaultTol);

enum class AccessClass { Qualified, Forbidden, Intermediate };

char access_code(AccessClass c);

struct SubsetVerdict {
    IndexSet J;
    AccessClass algebraic;
    /// 'Q', 'F', '-' (neither) or 's' (skipped over budget).
    char brute;
    /// "ok", "mismatch" or "-" (not run).
    std::string state;
    bool agrees() const;
    std::string line() const;
};

struct AccessStructureReport {
    size_t n;
    std::vector<SubsetVerdict> subsets;  // ordered by subset bitmask, bit j-1 = share j
    bool consistent() const;
    size_t count(AccessClass c) const;
};

/// Classifies all 2^n holder sets. Cross-checks the algebraic verdict against
/// the brute-force erasure oracle and, for prime q, against reduced states of
/// synthesized (or supplied) codewords. Throws std::invalid_argument for n > 12.
AccessStructureReport full_access_structure(const StabilizerCode &code,
                                            const std::optional<CodewordFamily> &codewords = std::nullopt,
                                            double tol = kDefaultTol);

struct DimensionCheck {
    std::string name;
    bool applicable;
    bool holds;
    std::string detail;
};

struct DimensionAudit {
    SharePartition partition;
    bool qualified;
    size_t dim_C_J;
    size_t dim_C_Jbar;
    size_t dim_dual_Jbar;
    size_t dim_projection_Jbar;
    long ell;
    std::vector<DimensionCheck> checks;
    bool all_hold() const;
};

/// Recomputes the access dimensions independently and checks every bound
/// and identity relating them. Failures are recorded, never thrown.
DimensionAudit audit_dimensions(const StabilizerCode &code, const SharePartition &partition);

}  // namespace qss

#endif
