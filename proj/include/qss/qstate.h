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

#ifndef QSS_QSTATE_H
#define QSS_QSTATE_H

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qss/symplectic.h"

namespace qss {

using Complex = std::complex<double>;

constexpr double kDefaultTol = 1e-10;

/// Largest register dimension q^m the dense simulator will allocate.
constexpr size_t kMaxStateDim = size_t{1} << 24;

size_t checked_dim(int q, size_t m);

/// Big-endian digits of a computational basis label: qudit 1 is the most
/// significant digit.
std::vector<int> basis_digits(size_t index, int q, size_t m);
size_t basis_index(const std::vector<int> &digits, int q);

/// Dense amplitude vector over (C_q)^{tensor m}. Amplitude i belongs to the
/// basis label whose big-endian base-q digits are i.
class QuditState {
   public:
    QuditState(int q, size_t num_qudits);  // zero vector
    QuditState(int q, size_t num_qudits, Eigen::VectorXcd amps);
    static QuditState basis(int q, size_t num_qudits, size_t index);

    int q() const { return q_; }
    size_t num_qudits() const { return m_; }
    size_t dim() const { return static_cast<size_t>(amps_.size()); }
    const Eigen::VectorXcd &amps() const { return amps_; }
    Eigen::VectorXcd &amps() { return amps_; }

    double norm() const { return amps_.norm(); }
    bool is_normalized(double tol = kDefaultTol) const;
    /// Throws std::domain_error on a (numerically) zero vector.
    QuditState normalized() const;

    /// <this|other>.
    Complex inner(const QuditState &other) const;
    /// |this> tensor |other>; `other` supplies the less significant digits.
    QuditState tensor(const QuditState &other) const;

    QuditState operator+(const QuditState &other) const;
    QuditState operator*(Complex c) const;

   private:
    void check_compatible(const QuditState &other) const;

    int q_;
    size_t m_;
    Eigen::VectorXcd amps_;
};

/// |<a|b>| for normalized a, b; 1 means equal up to global phase.
double overlap_magnitude(const QuditState &a, const QuditState &b);

/// Max amplitude deviation of `actual` from `expected` after aligning the
/// global phase of `actual` to `expected`.
double phase_aligned_deviation(const QuditState &actual, const QuditState &expected);

/// phase * (X^{a_1} Z^{b_1}) tensor ... tensor (X^{a_m} Z^{b_m}) with
/// X|j> = |j+1 mod q>, Z|j> = w^j |j>, w = exp(2 pi i / q). Never materialized.
class PauliOperator {
   public:
    PauliOperator(int q, std::vector<int> x_part, std::vector<int> z_part, Complex phase = 1.0);

    int q() const { return q_; }
    size_t num_qudits() const { return x_.size(); }
    const std::vector<int> &x_part() const { return x_; }
    const std::vector<int> &z_part() const { return z_; }
    Complex phase() const { return phase_; }
    PauliOperator with_phase(Complex phase) const;

    /// Throws std::invalid_argument on dimension mismatch.
    QuditState apply(const QuditState &state) const;

   private:
    int q_;
    std::vector<int> x_;
    std::vector<int> z_;
    Complex phase_;
};

/// Unit-phase Pauli for a vector over a prime field. Throws std::invalid_argument
/// for extension fields.
PauliOperator pauli_from_vector(const SymplecticVector &v);
QuditState apply_pauli(const PauliOperator &op, const QuditState &state);

/// Phase c with (c P_v)^q = I: i^t for q = 2 where t counts the qudits with
/// a_j = b_j = 1 (this makes c P_v a Hermitian Pauli), and 1 for odd q.
Complex order_q_phase(const SymplecticVector &v);

class DensityMatrix {
   public:
    DensityMatrix(int q, size_t num_qudits, Eigen::MatrixXcd entries);
    static DensityMatrix pure(const QuditState &state);

    int q() const { return q_; }
    size_t num_qudits() const { return m_; }
    const Eigen::MatrixXcd &entries() const { return rho_; }

    Complex trace() const { return rho_.trace(); }
    double purity() const;
    /// Hermitian, unit trace, and positive semidefinite, each within tol.
    bool is_physical(double tol = kDefaultTol) const;

   private:
    int q_;
    size_t m_;
    Eigen::MatrixXcd rho_;
};

double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// <psi|rho|psi>.
double fidelity(const DensityMatrix &rho, const QuditState &psi);

/// (<phi|_I tensor I) |psi>, expressed on the qudits outside I in ascending
/// order. Its squared norm is the probability of outcome phi on I.
QuditState contract(const QuditState &psi, const QuditState &phi, const IndexSet &on);

/// Reduced state on `keep` (1-based, ascending order in the result).
DensityMatrix partial_trace(const QuditState &psi, const IndexSet &keep);
DensityMatrix partial_trace(const DensityMatrix &rho, const IndexSet &keep);

/// Applies `matrix` to the qudits `on` (ascending order, big-endian within
/// the sub-register) and the identity elsewhere.
QuditState apply_matrix(const QuditState &psi, const Eigen::MatrixXcd &matrix, const IndexSet &on);

/// Places `local` (on |I| qudits) and `rest` (on the complement) into one
/// register on m = |I| + |rest| qudits.
QuditState interleave(const QuditState &local, const IndexSet &on, const QuditState &rest);

/// Stabilizer generators over a prime field together with the phase attached
/// to each generator operator. The code space is the joint +1 eigenspace of
/// phase_i * P_{g_i}.
class PhasedStabilizer {
   public:
    PhasedStabilizer(int q, size_t num_qudits, std::vector<SymplecticVector> generators, std::vector<Complex> phases);

    /// Phases from `order_q_phase`.
    static PhasedStabilizer canonical(int q, size_t num_qudits, std::vector<SymplecticVector> generators);

    /// Phases under which `psi` is a +1 eigenvector of every generator, or
    /// nullopt if psi is not a joint eigenvector.
    static std::optional<PhasedStabilizer> resolve(size_t num_qudits, std::vector<SymplecticVector> generators,
                                                   const QuditState &psi, double tol = kDefaultTol);

    int q() const { return q_; }
    size_t num_qudits() const { return m_; }
    const std::vector<SymplecticVector> &generators() const { return generators_; }
    const std::vector<Complex> &phases() const { return phases_; }
    const std::vector<PauliOperator> &operators() const { return ops_; }

    /// Orthogonal projector onto the joint +1 eigenspace.
    QuditState project(const QuditState &psi) const;
    /// ||phase_i P_{g_i} psi - psi|| <= tol ||psi|| for every generator.
    bool fixes(const QuditState &psi, double tol = kDefaultTol) const;

    PhasedStabilizer with_extra(const std::vector<SymplecticVector> &generators) const;

   private:
    int q_;
    size_t m_;
    std::vector<SymplecticVector> generators_;
    std::vector<Complex> phases_;
    std::vector<PauliOperator> ops_;
};

/// True iff psi is a nonzero joint eigenvector of every stabilizer generator,
/// i.e. it is fixed once generator phases are resolved against it.
bool verify_codeword(const StabilizerCode &code, const QuditState &psi, double tol = kDefaultTol);
bool verify_codeword(const PhasedStabilizer &stabilizer, const QuditState &psi, double tol = kDefaultTol);

/// The encoded basis {psi(i)} for i in F_q^k, indexed by the big-endian
/// integer value of i, together with the phased stabilizer they satisfy.
struct CodewordFamily {
    int q;
    size_t n;
    size_t k;
    std::vector<QuditState> words;
    PhasedStabilizer stabilizer;
};

/// Builds psi(0) as the normalized projection of the first computational basis
/// state (lexicographic order) that survives the projector onto the joint +1
/// eigenspace of the stabilizer and the logical Z operators, then
/// psi(i) = prod_j (X_j-bar)^{i_j} psi(0). Prime fields only.
CodewordFamily synthesize_codewords(const StabilizerCode &code,
                                    const std::optional<std::vector<SymplecticVector>> &logical_x = std::nullopt,
                                    const std::optional<std::vector<Complex>> &phases = std::nullopt,
                                    double tol = kDefaultTol);

/// Wraps externally supplied codewords. Resolves generator phases from the
/// first word and requires every word to satisfy the same phases; words must
/// be orthonormal. Throws std::invalid_argument otherwise.
CodewordFamily codewords_from_states(const StabilizerCode &code, std::vector<QuditState> words,
                                     double tol = kDefaultTol);

/// sum_i alpha(i) psi(i).
QuditState encode(const CodewordFamily &family, const QuditState &secret);

}  // namespace qss

#endif
