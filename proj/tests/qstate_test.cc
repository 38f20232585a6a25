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

#include "qss/qstate.h"

#include <cmath>

#include <gtest/gtest.h>

#include "support/test_util.h"

using namespace qss;
using qss::testing::five_qubit_code;
using qss::testing::five_qubit_psi;

namespace {

constexpr double kTol = 1e-9;
const double kPi = std::acos(-1.0);

Complex omega(int q, long power) {
    return std::polar(1.0, 2 * kPi * static_cast<double>(power) / q);
}

}  // namespace

TEST(qstate, basis_digits_are_big_endian) {
    EXPECT_EQ(basis_digits(5, 2, 3), (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(basis_digits(7, 3, 2), (std::vector<int>{2, 1}));
    EXPECT_EQ(basis_index({2, 1}, 3), 7u);
    for (size_t i = 0; i < 27; i++) {
        EXPECT_EQ(basis_index(basis_digits(i, 3, 3), 3), i);
    }
    EXPECT_THROW(checked_dim(2, 25), std::length_error);
    EXPECT_EQ(checked_dim(2, 24), kMaxStateDim);
}

TEST(qstate, tensor_puts_other_in_low_digits) {
    auto a = QuditState::basis(3, 1, 2);
    auto b = QuditState::basis(3, 1, 1);
    auto ab = a.tensor(b);
    EXPECT_EQ(ab.num_qudits(), 2u);
    EXPECT_NEAR(std::abs(ab.amps()[7] - Complex(1.0)), 0.0, kTol);
}

TEST(qstate, normalized_rejects_zero) {
    EXPECT_THROW(QuditState(2, 2).normalized(), std::domain_error);
}

TEST(qstate, pauli_examples) {
    // X on qubit 1 of |00> gives |10>.
    PauliOperator x1(2, {1, 0}, {0, 0});
    auto out = x1.apply(QuditState::basis(2, 2, 0));
    EXPECT_NEAR(std::abs(out.amps()[2] - Complex(1.0)), 0.0, kTol);

    // Z on a qutrit multiplies |2> by w^2.
    PauliOperator z(3, {0}, {1});
    auto zs = z.apply(QuditState::basis(3, 1, 2));
    EXPECT_NEAR(std::abs(zs.amps()[2] - omega(3, 2)), 0.0, kTol);

    // X Z acts as w^{b j} |j + a>: on |1>, XZ|1> = w |2>.
    PauliOperator xz(3, {1}, {1});
    auto xzs = xz.apply(QuditState::basis(3, 1, 1));
    EXPECT_NEAR(std::abs(xzs.amps()[2] - omega(3, 1)), 0.0, kTol);

    EXPECT_THROW(x1.apply(QuditState::basis(2, 3, 0)), std::invalid_argument);
}

TEST(qstate, order_q_phase_makes_hermitian_pauli) {
    auto f2 = Field::make(2);
    auto y = SymplecticVector::from_ints(f2, {1, 1});
    EXPECT_NEAR(std::abs(order_q_phase(y) - Complex(0, 1)), 0.0, kTol);
    auto op = pauli_from_vector(y).with_phase(order_q_phase(y));
    std::mt19937_64 rng(1);
    auto psi = qss::testing::random_state(rng, 2, 1);
    auto twice = op.apply(op.apply(psi));
    EXPECT_LT((twice.amps() - psi.amps()).norm(), kTol);
    EXPECT_THROW(pauli_from_vector(SymplecticVector(Field::make(2, 2), 1)), std::invalid_argument);
}

TEST(qstate, commutation_phase_follows_symplectic_product) {
    std::mt19937_64 rng(7);
    for (int q : {2, 3, 5}) {
        auto f = Field::make(q);
        for (int trial = 0; trial < 20; trial++) {
            auto u = qss::testing::random_vector(rng, f, 2);
            auto v = qss::testing::random_vector(rng, f, 2);
            auto psi = qss::testing::random_state(rng, q, 2);
            auto pu = pauli_from_vector(u);
            auto pv = pauli_from_vector(v);
            auto uv = pu.apply(pv.apply(psi));
            auto vu = pv.apply(pu.apply(psi));
            // P_u P_v = w^{<v,u>} P_v P_u under X|j> = |j+1>, Z|j> = w^j |j>.
            auto expected = vu * omega(q, symplectic_product(v, u).value());
            EXPECT_LT((uv.amps() - expected.amps()).norm(), kTol);
        }
    }
}

TEST(qstate, reference_codewords_are_stabilized) {
    auto code = five_qubit_code();
    EXPECT_TRUE(verify_codeword(code, five_qubit_psi(0)));
    EXPECT_TRUE(verify_codeword(code, five_qubit_psi(1)));
    EXPECT_FALSE(verify_codeword(code, QuditState::basis(2, 5, 0)));

    auto canonical = PhasedStabilizer::canonical(2, 5, code.raw_generators());
    EXPECT_TRUE(verify_codeword(canonical, five_qubit_psi(0)));
    EXPECT_TRUE(verify_codeword(canonical, five_qubit_psi(1)));
}

TEST(qstate, synthesized_codewords_span_reference_ones) {
    auto code = five_qubit_code();
    auto family = synthesize_codewords(code);
    ASSERT_EQ(family.words.size(), 2u);
    EXPECT_NEAR(std::abs(family.words[0].inner(family.words[1])), 0.0, kTol);
    for (int i : {0, 1}) {
        EXPECT_TRUE(family.words[i].is_normalized(kTol));
        EXPECT_TRUE(verify_codeword(family.stabilizer, family.words[i]));
        auto reference = five_qubit_psi(i);
        double weight = std::norm(family.words[0].inner(reference)) + std::norm(family.words[1].inner(reference));
        EXPECT_NEAR(weight, 1.0, kTol);
    }
}

TEST(qstate, synthesis_with_supplied_logical_x) {
    auto code = five_qubit_code();
    auto f2 = Field::make(2);
    auto xbar = SymplecticVector::from_ints(f2, {1, 0, 1, 0, 1, 0, 1, 0, 1, 0});
    auto family = synthesize_codewords(code, std::vector<SymplecticVector>{xbar});
    auto op = pauli_from_vector(xbar);
    auto flipped = op.apply(family.words[0]);
    EXPECT_LT(phase_aligned_deviation(flipped, family.words[1]), kTol);
}

TEST(qstate, synthesis_edge_cases) {
    auto f2 = Field::make(2);
    // k = 0: a single stabilizer state.
    StabilizerCode bell(f2, 2, 0,
                        {SymplecticVector::from_ints(f2, {1, 0, 1, 0}), SymplecticVector::from_ints(f2, {0, 1, 0, 1})});
    auto b = synthesize_codewords(bell);
    ASSERT_EQ(b.words.size(), 1u);
    EXPECT_NEAR(std::abs(b.words[0].amps()[0]), 1 / std::sqrt(2.0), kTol);
    EXPECT_NEAR(std::abs(b.words[0].amps()[3]), 1 / std::sqrt(2.0), kTol);

    // n = k = 1 over F_3: the identity encoding.
    StabilizerCode trivial(Field::make(3), 1, 1, {});
    auto t = synthesize_codewords(trivial);
    ASSERT_EQ(t.words.size(), 3u);
    for (size_t i = 0; i < 3; i++) {
        EXPECT_NEAR(std::abs(t.words[i].amps()[i]), 1.0, kTol);
    }

    StabilizerCode ext(Field::make(2, 2), 1, 1, {});
    EXPECT_THROW(synthesize_codewords(ext), std::invalid_argument);
}

TEST(qstate, synthesis_on_random_codes) {
    std::mt19937_64 rng(29);
    for (int q : {2, 3}) {
        for (int trial = 0; trial < 10; trial++) {
            size_t n = 1 + trial % 4;
            size_t k = trial % (n + 1);
            auto code = qss::testing::random_code(rng, q, n, k);
            auto family = synthesize_codewords(code);
            ASSERT_EQ(family.words.size(), static_cast<size_t>(std::pow(q, k)));
            for (size_t i = 0; i < family.words.size(); i++) {
                EXPECT_TRUE(verify_codeword(family.stabilizer, family.words[i]));
                for (size_t j = 0; j < family.words.size(); j++) {
                    EXPECT_NEAR(std::abs(family.words[i].inner(family.words[j])), i == j ? 1.0 : 0.0, kTol);
                }
            }
        }
    }
}

TEST(qstate, codewords_from_states_checks_inputs) {
    auto code = five_qubit_code();
    auto family = codewords_from_states(code, {five_qubit_psi(0), five_qubit_psi(1)});
    EXPECT_EQ(family.words.size(), 2u);
    EXPECT_THROW(codewords_from_states(code, {five_qubit_psi(0)}), std::invalid_argument);
    EXPECT_THROW(codewords_from_states(code, {five_qubit_psi(0), five_qubit_psi(0)}), std::invalid_argument);
    EXPECT_THROW(codewords_from_states(code, {QuditState::basis(2, 5, 0), five_qubit_psi(1)}),
                 std::invalid_argument);
}

TEST(qstate, encode_is_linear) {
    auto code = five_qubit_code();
    auto family = codewords_from_states(code, {five_qubit_psi(0), five_qubit_psi(1)});
    Eigen::VectorXcd s(2);
    s << 0.6, 0.8;
    auto enc = encode(family, QuditState(2, 1, s));
    auto expected = five_qubit_psi(0) * 0.6 + five_qubit_psi(1) * 0.8;
    EXPECT_LT((enc.amps() - expected.amps()).norm(), kTol);
}

TEST(qstate, contract_examples) {
    // <1|_2 on |01> leaves |0> on qubit 1.
    auto psi = QuditState::basis(2, 2, 1);
    auto left = contract(psi, QuditState::basis(2, 1, 1), {2});
    EXPECT_NEAR(std::abs(left.amps()[0] - Complex(1.0)), 0.0, kTol);
    auto none = contract(psi, QuditState::basis(2, 1, 0), {2});
    EXPECT_NEAR(none.norm(), 0.0, kTol);
}

TEST(qstate, contraction_probabilities_sum_to_one) {
    std::mt19937_64 rng(31);
    for (int q : {2, 3}) {
        auto psi = qss::testing::random_state(rng, q, 3);
        for (const IndexSet &on : {IndexSet{1}, IndexSet{2}, IndexSet{1, 3}}) {
            size_t d = checked_dim(q, on.size());
            double total = 0;
            for (size_t i = 0; i < d; i++) {
                total += std::pow(contract(psi, QuditState::basis(q, on.size(), i), on).norm(), 2);
            }
            EXPECT_NEAR(total, 1.0, kTol);
        }
    }
}

TEST(qstate, partial_trace_examples) {
    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell[0] = bell[3] = 1 / std::sqrt(2.0);
    auto rho = partial_trace(QuditState(2, 2, bell), {1});
    EXPECT_NEAR(rho.purity(), 0.5, kTol);
    EXPECT_TRUE(rho.is_physical());

    auto prod = QuditState::basis(2, 1, 1).tensor(QuditState::basis(2, 1, 0));
    auto r2 = partial_trace(prod, {2});
    EXPECT_NEAR(std::abs(r2.entries()(0, 0) - Complex(1.0)), 0.0, kTol);
    EXPECT_NEAR(fidelity(r2, QuditState::basis(2, 1, 0)), 1.0, kTol);
    EXPECT_NEAR(trace_distance(r2, DensityMatrix::pure(QuditState::basis(2, 1, 1))), 1.0, kTol);
}

TEST(qstate, partial_trace_is_physical_and_composes) {
    std::mt19937_64 rng(37);
    for (int q : {2, 3}) {
        auto psi = qss::testing::random_state(rng, q, 4);
        auto r13 = partial_trace(psi, {1, 3, 4});
        EXPECT_TRUE(r13.is_physical(kTol));
        auto direct = partial_trace(psi, {3});
        auto nested = partial_trace(r13, {2});
        EXPECT_LT((direct.entries() - nested.entries()).norm(), kTol);
    }
}

TEST(qstate, one_qudit_five_qubit_marginal_is_maximally_mixed) {
    auto rho = partial_trace(five_qubit_psi(0), {1, 2});
    EXPECT_NEAR(rho.purity(), 0.25, kTol);
}

TEST(qstate, apply_matrix_matches_kronecker_product) {
    std::mt19937_64 rng(41);
    auto psi = qss::testing::random_state(rng, 2, 3);
    auto u = qss::testing::random_unitary(rng, 2);
    auto out = apply_matrix(psi, u, {2});
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(8, 8);
    for (int a = 0; a < 8; a++) {
        for (int b = 0; b < 8; b++) {
            full(a, b) = id(a >> 2, b >> 2) * u((a >> 1) & 1, (b >> 1) & 1) * id(a & 1, b & 1);
        }
    }
    EXPECT_LT((out.amps() - full * psi.amps()).norm(), kTol);
}

TEST(qstate, interleave_inverts_split) {
    auto local = QuditState::basis(3, 2, 5);  // digits (1, 2)
    auto rest = QuditState::basis(3, 1, 1);
    auto all = interleave(local, {1, 3}, rest);
    // Qudits 1, 2, 3 carry digits 1, 1, 2.
    EXPECT_NEAR(std::abs(all.amps()[basis_index({1, 1, 2}, 3)] - Complex(1.0)), 0.0, kTol);
}

TEST(qstate, overlap_and_phase_alignment) {
    auto a = QuditState::basis(2, 1, 0);
    auto b = a * Complex(0, 1);
    EXPECT_NEAR(overlap_magnitude(a, b), 1.0, kTol);
    EXPECT_NEAR(phase_aligned_deviation(b, a), 0.0, kTol);
}
