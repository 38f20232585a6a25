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

#ifndef QSS_SYMPLECTIC_H
#define QSS_SYMPLECTIC_H

#include <memory>
#include <string>
#include <vector>

#include "qss/gf.h"
#include "qss/linalg.h"

namespace qss {

/// Sorted set of 1-based qudit (share) indices.
using IndexSet = std::vector<size_t>;

/// Sorts, dedupes, and range-checks a 1-based index set against {1..n}.
IndexSet normalize_index_set(IndexSet indices, size_t n);
IndexSet complement_of(const IndexSet &indices, size_t n);
std::string format_index_set(const IndexSet &indices);

/// A vector of F_q^{2n} in interleaved order (a_1, b_1, ..., a_n, b_n).
/// a_j is the X exponent and b_j the Z exponent on qudit j.
class SymplecticVector {
   public:
    SymplecticVector(std::shared_ptr<const Field> field, size_t num_qudits);
    SymplecticVector(std::shared_ptr<const Field> field, std::vector<FieldValue> coords);
    static SymplecticVector from_ints(std::shared_ptr<const Field> field, const std::vector<int> &coords);

    const Field &field() const { return *field_; }
    const std::shared_ptr<const Field> &field_ptr() const { return field_; }
    size_t num_qudits() const { return coords_.size() / 2; }
    const std::vector<FieldValue> &coords() const { return coords_; }

    /// 0-based qudit offset.
    FieldValue x(size_t qudit) const { return coords_[2 * qudit]; }
    FieldValue z(size_t qudit) const { return coords_[2 * qudit + 1]; }
    void set(size_t qudit, FieldValue x, FieldValue z);

    bool is_zero() const;
    /// 1-based indices of qudits where (a_j, b_j) != (0, 0).
    IndexSet support() const;

    SymplecticVector operator+(const SymplecticVector &other) const;
    SymplecticVector scaled(FieldValue c) const;
    bool operator==(const SymplecticVector &other) const;
    bool operator!=(const SymplecticVector &other) const { return !(*this == other); }

    std::string str() const;

   private:
    std::shared_ptr<const Field> field_;
    std::vector<FieldValue> coords_;
};

/// sum_i a_i b'_i - a'_i b_i. Throws std::invalid_argument on field or length mismatch.
FieldElement symplectic_product(const SymplecticVector &x, const SymplecticVector &y);

/// A subspace of F_q^{2n}, stored as its canonical reduced row-echelon basis.
/// Two subspaces are equal iff their stored bases are identical.
class SymplecticSubspace {
   public:
    SymplecticSubspace(std::shared_ptr<const Field> field, size_t num_qudits);  // zero subspace
    static SymplecticSubspace full(std::shared_ptr<const Field> field, size_t num_qudits);

    const Field &field() const { return *field_; }
    const std::shared_ptr<const Field> &field_ptr() const { return field_; }
    size_t num_qudits() const { return n_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<SymplecticVector> &basis() const { return basis_; }

    bool contains(const SymplecticVector &v) const;
    bool is_subspace_of(const SymplecticSubspace &other) const;
    bool operator==(const SymplecticSubspace &other) const;
    bool operator!=(const SymplecticSubspace &other) const { return !(*this == other); }

    linalg::Rows rows() const;

   private:
    friend SymplecticSubspace rref(std::shared_ptr<const Field> field, size_t num_qudits,
                                   const std::vector<SymplecticVector> &vectors);
    friend SymplecticSubspace from_rows(std::shared_ptr<const Field> field, size_t num_qudits,
                                        linalg::Rows rows);

    std::shared_ptr<const Field> field_;
    size_t n_;
    std::vector<SymplecticVector> basis_;
};

/// Span of `vectors` in canonical form. Empty input gives the zero subspace.
SymplecticSubspace rref(std::shared_ptr<const Field> field, size_t num_qudits,
                        const std::vector<SymplecticVector> &vectors);
SymplecticSubspace from_rows(std::shared_ptr<const Field> field, size_t num_qudits, linalg::Rows rows);

/// {x : <x, y> = 0 for all y in s}. Has dimension 2n - dim s.
SymplecticSubspace symplectic_dual(const SymplecticSubspace &s);

/// s intersected with F_q^I: the vectors of s that vanish on every qudit outside I.
/// The result stays in F_q^{2n}.
SymplecticSubspace restrict_to(const SymplecticSubspace &s, const IndexSet &indices);

/// Keeps the (a_j, b_j) pairs for j in I, ascending; the result has 2|I| coordinates.
SymplecticVector project(const SymplecticVector &x, const IndexSet &indices);
SymplecticSubspace project(const SymplecticSubspace &s, const IndexSet &indices);

/// Inverse of `project` for a vector supported on I: places local pair t on qudit indices[t].
SymplecticVector embed(const SymplecticVector &local, const IndexSet &indices, size_t num_qudits);

/// A q-ary stabilizer code encoding k qudits into n, given by a self-orthogonal
/// (n-k)-dimensional stabilizer C in F_q^{2n}.
class StabilizerCode {
   public:
    /// Throws std::invalid_argument if the generators do not have rank n-k or
    /// fail pairwise symplectic orthogonality.
    StabilizerCode(std::shared_ptr<const Field> field, size_t n, size_t k,
                   std::vector<SymplecticVector> generators);

    const Field &field() const { return *field_; }
    const std::shared_ptr<const Field> &field_ptr() const { return field_; }
    size_t n() const { return n_; }
    size_t k() const { return k_; }
    const SymplecticSubspace &stabilizer() const { return stabilizer_; }
    /// C^perp, of dimension n + k.
    const SymplecticSubspace &normalizer() const { return normalizer_; }
    const std::vector<SymplecticVector> &raw_generators() const { return raw_generators_; }

   private:
    std::shared_ptr<const Field> field_;
    size_t n_;
    size_t k_;
    std::vector<SymplecticVector> raw_generators_;
    SymplecticSubspace stabilizer_;
    SymplecticSubspace normalizer_;
};

/// Candidate reconstructing set J together with its complement J-bar.
class SharePartition {
   public:
    SharePartition(size_t n, IndexSet qualified_candidate);
    static SharePartition from_complement(size_t n, const IndexSet &complement);

    size_t n() const { return n_; }
    const IndexSet &J() const { return j_; }
    const IndexSet &Jbar() const { return jbar_; }

   private:
    size_t n_;
    IndexSet j_;
    IndexSet jbar_;
};

struct AccessAnalysis {
    SharePartition partition;
    bool qualified;
    /// |J| - k - dim(C cap F_q^J). Only meaningful when qualified; may be
    /// negative otherwise.
    long ell;
    size_t dim_C_J;
    size_t dim_C_Jbar;

    bool ell_equals_Jbar() const { return ell == static_cast<long>(partition.Jbar().size()); }
};

/// C^perp cap F_q^{Jbar} == C cap F_q^{Jbar}.
bool is_qualified(const StabilizerCode &code, const SharePartition &partition);

/// Logical Pauli pairs of a code: vectors of C^perp with <x_i, z_j> = delta_ij,
/// <x_i, x_j> = <z_i, z_j> = 0, independent modulo C.
struct LogicalOperators {
    std::vector<SymplecticVector> x;
    std::vector<SymplecticVector> z;
};

/// Symplectic Gram-Schmidt over the canonical basis of C^perp taken modulo C.
LogicalOperators default_logical_operators(const StabilizerCode &code);

/// Completes caller-chosen logical X vectors with matching logical Z vectors.
/// Throws std::invalid_argument unless the k vectors lie in C^perp, commute,
/// and are independent modulo C.
LogicalOperators logical_operators_from_x(const StabilizerCode &code, std::vector<SymplecticVector> logical_x);

/// Throws std::logic_error if a qualified partition violates the dimension
/// relations that qualification implies.
AccessAnalysis analyze(const StabilizerCode &code, const SharePartition &partition);

}  // namespace qss

#endif
