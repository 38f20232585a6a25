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

#ifndef QSS_RECONSTRUCT_H
#define QSS_RECONSTRUCT_H

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qss/qstate.h"
#include "qss/symplectic.h"

namespace qss {

/// The holder set fails C^perp cap F_q^{Jbar} == C cap F_q^{Jbar}.
class NotQualifiedError : public std::invalid_argument {
   public:
    explicit NotQualifiedError(const std::string &what) : std::invalid_argument(what) {}
};

/// Numerical or structural inconsistency while building a plan for a set the
/// algebra reports as qualified.
class ReconstructionError : public std::runtime_error {
   public:
    explicit ReconstructionError(const std::string &what) : std::runtime_error(what) {}
};

/// Orthonormal basis {phi_Jbar(i)} of the code on the erased shares defined by
/// C cap F_q^{Jbar}. states[i] lives on |Jbar| qudits; i is the label.
struct ErasedCodeBasis {
    SharePartition partition;
    long ell;
    std::vector<QuditState> states;
};

/// Where U_rec leaves its output inside J. All entries are 1-based global
/// share indices; together they cover J in ascending order
/// (label, then padding, then secret).
struct RegisterLayout {
    IndexSet label;
    IndexSet padding;
    IndexSet secret;
};

struct PhiFamily {
    /// states[i_k * q^ell + i_ell] = phi_J(i_k, i_ell), on |J| qudits.
    std::vector<QuditState> states;
    /// Norm of each contraction before normalization, same indexing.
    std::vector<double> contraction_norms;
};

struct ReconstructionPlan {
    StabilizerCode code;
    SharePartition partition;
    AccessAnalysis analysis;
    CodewordFamily codewords;
    ErasedCodeBasis erased_basis;
    PhiFamily phi_J;
    RegisterLayout layout;
    Eigen::MatrixXcd u_rec;
    double tol;

    const QuditState &phi(size_t secret_label, size_t erased_label) const;
    /// max |(U^dagger U - I)_{ij}|.
    double unitarity_error() const;
};

struct ReconstructionReport {
    QuditState output_state;
    DensityMatrix secret_state;
    double secret_fidelity;
    double purity_of_secret_register;
    /// Trace distance of the secret register's reduced state from the ideal secret.
    double residual_entanglement;
};

/// Throws NotQualifiedError, or ReconstructionError if the number of states
/// produced differs from q^ell.
ErasedCodeBasis build_erased_basis(const StabilizerCode &code, const SharePartition &partition,
                                   const CodewordFamily &codewords, double tol = kDefaultTol);

/// phi_J(i_k, i_ell) from contracting psi(i_k) with phi_Jbar(i_ell) on Jbar.
/// Throws ReconstructionError if any contraction norm differs from
/// q^{-ell/2} by more than tol.
PhiFamily build_phi_J(const SharePartition &partition, const CodewordFamily &codewords,
                      const ErasedCodeBasis &erased_basis, double tol = kDefaultTol);

/// Assembles U_rec: phi_J(i_k, i_ell) -> |i_ell>|0...0>|i_k> on J, completed to
/// a unitary by Gram-Schmidt over the computational basis.
ReconstructionPlan build_u_rec(const StabilizerCode &code, const SharePartition &partition,
                               const CodewordFamily &codewords, ErasedCodeBasis erased_basis, PhiFamily phi_J,
                               double tol = kDefaultTol);

ReconstructionPlan plan_reconstruction(const StabilizerCode &code, const SharePartition &partition,
                                       const CodewordFamily &codewords, double tol = kDefaultTol);
ReconstructionPlan plan_reconstruction(const StabilizerCode &code, const SharePartition &partition,
                                       const CodewordFamily &codewords, ErasedCodeBasis erased_basis,
                                       double tol = kDefaultTol);

/// U_rec on the J shares, identity on Jbar.
QuditState apply_reconstruction(const ReconstructionPlan &plan, const QuditState &shares);

/// Encodes `secret`, applies U_rec, and scores the secret register.
/// Throws std::invalid_argument for an unnormalized secret.
ReconstructionReport reconstruct(const ReconstructionPlan &plan, const QuditState &secret);

/// As `reconstruct`, starting from a given (possibly disturbed) share state.
ReconstructionReport reconstruct_from_shares(const ReconstructionPlan &plan, const QuditState &shares,
                                             const QuditState &secret);

struct ExpansionCheck {
    bool ok;
    double max_deviation;
};

/// Rebuilds each psi(i_k) as q^{-ell/2} sum_i phi_Jbar(i) (x) phi_J(i_k, i) and
/// compares with `codewords` up to a global phase per word.
ExpansionCheck verify_expansion(const ReconstructionPlan &plan, const std::vector<QuditState> &codewords);
ExpansionCheck verify_expansion(const ReconstructionPlan &plan);

}  // namespace qss

#endif
