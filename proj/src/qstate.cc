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
#include <numbers>
#include <stdexcept>

namespace qss {

namespace {

Complex root_of_unity(int q, long t) {
    t %= q;
    if (t < 0) {
        t += q;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / q);
}

struct RegisterSplit {
    std::vector<size_t> inner;  // index within the selected qudits
    std::vector<size_t> outer;  // index within the remaining qudits
    size_t inner_dim;
    size_t outer_dim;
};

RegisterSplit split_register(int q, size_t m, const IndexSet &on) {
    IndexSet sel = normalize_index_set(on, m);
    std::vector<bool> selected(m, false);
    for (auto j : sel) {
        selected[j - 1] = true;
    }
    RegisterSplit s;
    size_t dim = checked_dim(q, m);
    s.inner_dim = checked_dim(q, sel.size());
    s.outer_dim = checked_dim(q, m - sel.size());
    s.inner.resize(dim);
    s.outer.resize(dim);
    for (size_t i = 0; i < dim; i++) {
        size_t in = 0;
        size_t out = 0;
        size_t rem = i;
        size_t in_place = 1;
        size_t out_place = 1;
        // Walk digits from least significant (qudit m) upward.
        for (size_t t = m; t-- > 0;) {
            size_t d = rem % static_cast<size_t>(q);
            rem /= static_cast<size_t>(q);
            if (selected[t]) {
                in += d * in_place;
                in_place *= static_cast<size_t>(q);
            } else {
                out += d * out_place;
                out_place *= static_cast<size_t>(q);
            }
        }
        s.inner[i] = in;
        s.outer[i] = out;
    }
    return s;
}

void require_prime_field(const Field &f) {
    if (!f.is_prime()) {
        throw std::invalid_argument("state simulation needs a prime field, got " + f.str());
    }
}

}  // namespace

size_t checked_dim(int q, size_t m) {
    if (q < 2) {
        throw std::invalid_argument("local dimension must be >= 2");
    }
    size_t d = 1;
    for (size_t i = 0; i < m; i++) {
        d *= static_cast<size_t>(q);
        if (d > kMaxStateDim) {
            throw std::length_error("register of " + std::to_string(m) + " qudits of dimension " + std::to_string(q) +
                                    " is too large to simulate densely");
        }
    }
    return d;
}

std::vector<int> basis_digits(size_t index, int q, size_t m) {
    std::vector<int> d(m);
    for (size_t t = m; t-- > 0;) {
        d[t] = static_cast<int>(index % static_cast<size_t>(q));
        index /= static_cast<size_t>(q);
    }
    return d;
}

size_t basis_index(const std::vector<int> &digits, int q) {
    size_t v = 0;
    for (int d : digits) {
        v = v * static_cast<size_t>(q) + static_cast<size_t>(d);
    }
    return v;
}

QuditState::QuditState(int q, size_t num_qudits)
    : q_(q), m_(num_qudits), amps_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(checked_dim(q, num_qudits)))) {
}

QuditState::QuditState(int q, size_t num_qudits, Eigen::VectorXcd amps) : q_(q), m_(num_qudits), amps_(std::move(amps)) {
    if (static_cast<size_t>(amps_.size()) != checked_dim(q, num_qudits)) {
        throw std::invalid_argument("amplitude vector length " + std::to_string(amps_.size()) + " is not " +
                                    std::to_string(q) + "^" + std::to_string(num_qudits));
    }
}

QuditState QuditState::basis(int q, size_t num_qudits, size_t index) {
    QuditState s(q, num_qudits);
    if (index >= s.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
    return s;
}

bool QuditState::is_normalized(double tol) const {
    return std::abs(amps_.squaredNorm() - 1.0) <= tol;
}

QuditState QuditState::normalized() const {
    double nrm = norm();
    if (nrm < 1e-300) {
        throw std::domain_error("cannot normalize a zero state");
    }
    return QuditState(q_, m_, amps_ / nrm);
}

void QuditState::check_compatible(const QuditState &other) const {
    if (q_ != other.q_ || m_ != other.m_) {
        throw std::invalid_argument("states live on different registers");
    }
}

Complex QuditState::inner(const QuditState &other) const {
    check_compatible(other);
    return amps_.dot(other.amps_);
}

QuditState QuditState::tensor(const QuditState &other) const {
    if (q_ != other.q_) {
        throw std::invalid_argument("tensor product of registers with different local dimension");
    }
    QuditState out(q_, m_ + other.m_);
    auto inner_dim = other.amps_.size();
    for (Eigen::Index i = 0; i < amps_.size(); i++) {
        out.amps_.segment(i * inner_dim, inner_dim) = amps_[i] * other.amps_;
    }
    return out;
}

QuditState QuditState::operator+(const QuditState &other) const {
    check_compatible(other);
    return QuditState(q_, m_, amps_ + other.amps_);
}

QuditState QuditState::operator*(Complex c) const {
    return QuditState(q_, m_, amps_ * c);
}

double overlap_magnitude(const QuditState &a, const QuditState &b) {
    return std::abs(a.inner(b));
}

double phase_aligned_deviation(const QuditState &actual, const QuditState &expected) {
    Complex ov = actual.inner(expected);
    Complex align = std::abs(ov) > 1e-300 ? ov / std::abs(ov) : Complex(1.0);
    return (actual.amps() * align - expected.amps()).cwiseAbs().maxCoeff();
}

PauliOperator::PauliOperator(int q, std::vector<int> x_part, std::vector<int> z_part, Complex phase)
    : q_(q), x_(std::move(x_part)), z_(std::move(z_part)), phase_(phase) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("Pauli X and Z parts differ in length");
    }
}

PauliOperator PauliOperator::with_phase(Complex phase) const {
    return PauliOperator(q_, x_, z_, phase);
}

QuditState PauliOperator::apply(const QuditState &state) const {
    if (state.q() != q_ || state.num_qudits() != x_.size()) {
        throw std::invalid_argument("Pauli operator and state dimensions differ");
    }
    size_t m = x_.size();
    std::vector<Complex> omega(q_);
    for (int t = 0; t < q_; t++) {
        omega[t] = root_of_unity(q_, t);
    }
    QuditState out(q_, m);
    std::vector<int> digits(m);
    for (size_t i = 0; i < state.dim(); i++) {
        Complex a = state.amps()[static_cast<Eigen::Index>(i)];
        if (a == Complex(0.0)) {
            continue;
        }
        size_t rem = i;
        long exponent = 0;
        size_t target = 0;
        size_t place = 1;
        for (size_t t = m; t-- > 0;) {
            int d = static_cast<int>(rem % static_cast<size_t>(q_));
            rem /= static_cast<size_t>(q_);
            exponent += static_cast<long>(z_[t]) * d;
            target += static_cast<size_t>((d + x_[t]) % q_) * place;
            place *= static_cast<size_t>(q_);
        }
        out.amps()[static_cast<Eigen::Index>(target)] += phase_ * omega[exponent % q_] * a;
    }
    return out;
}

PauliOperator pauli_from_vector(const SymplecticVector &v) {
    require_prime_field(v.field());
    size_t m = v.num_qudits();
    std::vector<int> x(m);
    std::vector<int> z(m);
    for (size_t t = 0; t < m; t++) {
        x[t] = v.x(t);
        z[t] = v.z(t);
    }
    return PauliOperator(v.field().order(), std::move(x), std::move(z));
}

QuditState apply_pauli(const PauliOperator &op, const QuditState &state) {
    return op.apply(state);
}

Complex order_q_phase(const SymplecticVector &v) {
    if (v.field().order() != 2) {
        return 1.0;
    }
    int t = 0;
    for (size_t j = 0; j < v.num_qudits(); j++) {
        if (v.x(j) == 1 && v.z(j) == 1) {
            t++;
        }
    }
    static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[t % 4];
}

DensityMatrix::DensityMatrix(int q, size_t num_qudits, Eigen::MatrixXcd entries)
    : q_(q), m_(num_qudits), rho_(std::move(entries)) {
    auto d = static_cast<Eigen::Index>(checked_dim(q, num_qudits));
    if (rho_.rows() != d || rho_.cols() != d) {
        throw std::invalid_argument("density matrix has the wrong shape");
    }
}

DensityMatrix DensityMatrix::pure(const QuditState &state) {
    return DensityMatrix(state.q(), state.num_qudits(), state.amps() * state.amps().adjoint());
}

double DensityMatrix::purity() const {
    return (rho_ * rho_).trace().real();
}

bool DensityMatrix::is_physical(double tol) const {
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) {
        return false;
    }
    if (std::abs(rho_.trace() - Complex(1.0)) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.q() != b.q() || a.num_qudits() != b.num_qudits()) {
        throw std::invalid_argument("trace distance between different registers");
    }
    Eigen::MatrixXcd diff = a.entries() - b.entries();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityMatrix &rho, const QuditState &psi) {
    if (rho.q() != psi.q() || rho.num_qudits() != psi.num_qudits()) {
        throw std::invalid_argument("fidelity between different registers");
    }
    return psi.amps().dot(rho.entries() * psi.amps()).real();
}

QuditState contract(const QuditState &psi, const QuditState &phi, const IndexSet &on) {
    if (phi.q() != psi.q()) {
        throw std::invalid_argument("contract: local dimensions differ");
    }
    IndexSet sel = normalize_index_set(on, psi.num_qudits());
    if (sel.size() != phi.num_qudits()) {
        throw std::invalid_argument("contract: state on " + std::to_string(phi.num_qudits()) +
                                    " qudits applied to index set of size " + std::to_string(sel.size()));
    }
    auto split = split_register(psi.q(), psi.num_qudits(), sel);
    QuditState out(psi.q(), psi.num_qudits() - sel.size());
    for (size_t i = 0; i < psi.dim(); i++) {
        out.amps()[static_cast<Eigen::Index>(split.outer[i])] +=
            std::conj(phi.amps()[static_cast<Eigen::Index>(split.inner[i])]) * psi.amps()[static_cast<Eigen::Index>(i)];
    }
    return out;
}

DensityMatrix partial_trace(const QuditState &psi, const IndexSet &keep) {
    auto split = split_register(psi.q(), psi.num_qudits(), keep);
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(split.inner_dim),
                                                  static_cast<Eigen::Index>(split.outer_dim));
    for (size_t i = 0; i < psi.dim(); i++) {
        mat(static_cast<Eigen::Index>(split.inner[i]), static_cast<Eigen::Index>(split.outer[i])) =
            psi.amps()[static_cast<Eigen::Index>(i)];
    }
    size_t kept = normalize_index_set(keep, psi.num_qudits()).size();
    return DensityMatrix(psi.q(), kept, mat * mat.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix &rho, const IndexSet &keep) {
    auto split = split_register(rho.q(), rho.num_qudits(), keep);
    size_t kept = normalize_index_set(keep, rho.num_qudits()).size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(split.inner_dim),
                                                  static_cast<Eigen::Index>(split.inner_dim));
    size_t dim = split.inner.size();
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            if (split.outer[r] == split.outer[c]) {
                out(static_cast<Eigen::Index>(split.inner[r]), static_cast<Eigen::Index>(split.inner[c])) +=
                    rho.entries()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return DensityMatrix(rho.q(), kept, std::move(out));
}

QuditState apply_matrix(const QuditState &psi, const Eigen::MatrixXcd &matrix, const IndexSet &on) {
    auto split = split_register(psi.q(), psi.num_qudits(), on);
    auto d = static_cast<Eigen::Index>(split.inner_dim);
    if (matrix.rows() != d || matrix.cols() != d) {
        throw std::invalid_argument("apply_matrix: operator dimension does not match the selected qudits");
    }
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(d, static_cast<Eigen::Index>(split.outer_dim));
    for (size_t i = 0; i < psi.dim(); i++) {
        mat(static_cast<Eigen::Index>(split.inner[i]), static_cast<Eigen::Index>(split.outer[i])) =
            psi.amps()[static_cast<Eigen::Index>(i)];
    }
    Eigen::MatrixXcd result = matrix * mat;
    QuditState out(psi.q(), psi.num_qudits());
    for (size_t i = 0; i < psi.dim(); i++) {
        out.amps()[static_cast<Eigen::Index>(i)] =
            result(static_cast<Eigen::Index>(split.inner[i]), static_cast<Eigen::Index>(split.outer[i]));
    }
    return out;
}

QuditState interleave(const QuditState &local, const IndexSet &on, const QuditState &rest) {
    if (local.q() != rest.q()) {
        throw std::invalid_argument("interleave: local dimensions differ");
    }
    size_t m = local.num_qudits() + rest.num_qudits();
    IndexSet sel = normalize_index_set(on, m);
    if (sel.size() != local.num_qudits()) {
        throw std::invalid_argument("interleave: index set size differs from local register");
    }
    auto split = split_register(local.q(), m, sel);
    QuditState out(local.q(), m);
    for (size_t i = 0; i < out.dim(); i++) {
        out.amps()[static_cast<Eigen::Index>(i)] = local.amps()[static_cast<Eigen::Index>(split.inner[i])] *
                                                   rest.amps()[static_cast<Eigen::Index>(split.outer[i])];
    }
    return out;
}

PhasedStabilizer::PhasedStabilizer(int q, size_t num_qudits, std::vector<SymplecticVector> generators,
                                   std::vector<Complex> phases)
    : q_(q), m_(num_qudits), generators_(std::move(generators)), phases_(std::move(phases)) {
    if (generators_.size() != phases_.size()) {
        throw std::invalid_argument("one phase per stabilizer generator is required");
    }
    for (size_t i = 0; i < generators_.size(); i++) {
        const auto &g = generators_[i];
        if (g.field().order() != q || g.num_qudits() != m_) {
            throw std::invalid_argument("generator " + g.str() + " does not match the register");
        }
        ops_.push_back(pauli_from_vector(g).with_phase(phases_[i]));
    }
}

PhasedStabilizer PhasedStabilizer::canonical(int q, size_t num_qudits, std::vector<SymplecticVector> generators) {
    std::vector<Complex> phases;
    for (const auto &g : generators) {
        phases.push_back(order_q_phase(g));
    }
    return PhasedStabilizer(q, num_qudits, std::move(generators), std::move(phases));
}

std::optional<PhasedStabilizer> PhasedStabilizer::resolve(size_t num_qudits, std::vector<SymplecticVector> generators,
                                                          const QuditState &psi, double tol) {
    double nrm2 = psi.amps().squaredNorm();
    if (nrm2 <= tol * tol) {
        return std::nullopt;
    }
    int q = psi.q();
    std::vector<Complex> phases;
    for (const auto &g : generators) {
        require_prime_field(g.field());
        if (g.field().order() != q || g.num_qudits() != num_qudits || psi.num_qudits() != num_qudits) {
            throw std::invalid_argument("generator " + g.str() + " does not match the state register");
        }
        Complex c = order_q_phase(g);
        QuditState image = pauli_from_vector(g).with_phase(c).apply(psi);
        Complex mu = psi.inner(image) / nrm2;
        if ((image.amps() - mu * psi.amps()).norm() > tol * std::sqrt(nrm2)) {
            return std::nullopt;
        }
        long t = std::lround(std::arg(mu) * q / (2.0 * std::numbers::pi));
        Complex root = root_of_unity(q, t);
        if (std::abs(mu - root) > 1e-6) {
            return std::nullopt;
        }
        phases.push_back(c * std::conj(root));
    }
    return PhasedStabilizer(q, num_qudits, std::move(generators), std::move(phases));
}

QuditState PhasedStabilizer::project(const QuditState &psi) const {
    QuditState acc = psi;
    for (const auto &op : ops_) {
        QuditState sum = acc;
        QuditState cur = acc;
        for (int c = 1; c < q_; c++) {
            cur = op.apply(cur);
            sum.amps() += cur.amps();
        }
        sum.amps() /= static_cast<double>(q_);
        acc = std::move(sum);
    }
    return acc;
}

bool PhasedStabilizer::fixes(const QuditState &psi, double tol) const {
    double nrm = psi.norm();
    for (const auto &op : ops_) {
        if ((op.apply(psi).amps() - psi.amps()).norm() > tol * nrm) {
            return false;
        }
    }
    return true;
}

PhasedStabilizer PhasedStabilizer::with_extra(const std::vector<SymplecticVector> &generators) const {
    auto gens = generators_;
    auto phases = phases_;
    int q = q_;
    for (const auto &g : generators) {
        gens.push_back(g);
        phases.push_back(order_q_phase(g));
        q = g.field().order();
    }
    return PhasedStabilizer(q, m_, std::move(gens), std::move(phases));
}

bool verify_codeword(const StabilizerCode &code, const QuditState &psi, double tol) {
    require_prime_field(code.field());
    if (psi.q() != code.field().order() || psi.num_qudits() != code.n()) {
        throw std::invalid_argument("codeword register does not match the code");
    }
    return PhasedStabilizer::resolve(code.n(), code.raw_generators(), psi, tol).has_value();
}

bool verify_codeword(const PhasedStabilizer &stabilizer, const QuditState &psi, double tol) {
    if (psi.num_qudits() != stabilizer.num_qudits()) {
        throw std::invalid_argument("codeword register does not match the stabilizer");
    }
    if (psi.norm() <= tol) {
        return false;
    }
    return stabilizer.fixes(psi, tol);
}

CodewordFamily synthesize_codewords(const StabilizerCode &code, const std::optional<std::vector<SymplecticVector>> &logical_x,
                                    const std::optional<std::vector<Complex>> &phases, double tol) {
    require_prime_field(code.field());
    int q = code.field().order();
    size_t n = code.n();
    size_t k = code.k();
    LogicalOperators logical = logical_x ? logical_operators_from_x(code, *logical_x) : default_logical_operators(code);
    PhasedStabilizer stab = phases ? PhasedStabilizer(q, n, code.raw_generators(), *phases)
                                   : PhasedStabilizer::canonical(q, n, code.raw_generators());
    PhasedStabilizer full = stab.with_extra(logical.z);

    size_t dim = checked_dim(q, n);
    std::optional<QuditState> zero_word;
    for (size_t seed = 0; seed < dim; seed++) {
        QuditState projected = full.project(QuditState::basis(q, n, seed));
        if (projected.norm() > 1e-6) {
            zero_word = projected.normalized();
            break;
        }
    }
    if (!zero_word) {
        throw std::logic_error("stabilizer projector annihilates every computational basis state");
    }

    std::vector<PauliOperator> shifts;
    for (const auto &x : logical.x) {
        shifts.push_back(pauli_from_vector(x).with_phase(order_q_phase(x)));
    }
    size_t count = checked_dim(q, k);
    std::vector<QuditState> words;
    words.reserve(count);
    for (size_t label = 0; label < count; label++) {
        auto digits = basis_digits(label, q, k);
        QuditState w = *zero_word;
        for (size_t j = 0; j < k; j++) {
            for (int r = 0; r < digits[j]; r++) {
                w = shifts[j].apply(w);
            }
        }
        if (!stab.fixes(w, tol)) {
            throw std::logic_error("synthesized codeword is not fixed by the stabilizer");
        }
        words.push_back(std::move(w));
    }
    for (size_t a = 0; a < count; a++) {
        for (size_t b = a; b < count; b++) {
            double expected = a == b ? 1.0 : 0.0;
            if (std::abs(words[a].inner(words[b]) - expected) > std::max(tol, 1e-9)) {
                throw std::logic_error("synthesized codewords are not orthonormal");
            }
        }
    }
    return CodewordFamily{q, n, k, std::move(words), std::move(stab)};
}

CodewordFamily codewords_from_states(const StabilizerCode &code, std::vector<QuditState> words, double tol) {
    require_prime_field(code.field());
    int q = code.field().order();
    size_t n = code.n();
    size_t k = code.k();
    size_t count = checked_dim(q, k);
    if (words.size() != count) {
        throw std::invalid_argument("expected " + std::to_string(count) + " codewords, got " +
                                    std::to_string(words.size()));
    }
    for (const auto &w : words) {
        if (w.q() != q || w.num_qudits() != n) {
            throw std::invalid_argument("codeword register does not match the code");
        }
    }
    auto stab = PhasedStabilizer::resolve(n, code.raw_generators(), words[0], tol);
    if (!stab) {
        throw std::invalid_argument("codeword 0 is not a joint eigenvector of the stabilizer");
    }
    for (size_t i = 1; i < count; i++) {
        if (!stab->fixes(words[i], tol)) {
            throw std::invalid_argument("codeword " + std::to_string(i) +
                                        " is not in the same stabilizer eigenspace as codeword 0");
        }
    }
    for (size_t a = 0; a < count; a++) {
        for (size_t b = a; b < count; b++) {
            double expected = a == b ? 1.0 : 0.0;
            if (std::abs(words[a].inner(words[b]) - expected) > tol) {
                throw std::invalid_argument("codewords are not orthonormal");
            }
        }
    }
    return CodewordFamily{q, n, k, std::move(words), std::move(*stab)};
}

QuditState encode(const CodewordFamily &family, const QuditState &secret) {
    if (secret.q() != family.q || secret.num_qudits() != family.k) {
        throw std::invalid_argument("secret register must hold k qudits of dimension q");
    }
    QuditState out(family.q, family.n);
    for (size_t i = 0; i < family.words.size(); i++) {
        out.amps() += secret.amps()[static_cast<Eigen::Index>(i)] * family.words[i].amps();
    }
    return out;
}

}  // namespace qss
