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

#include "qss/reconstruct.h"

#include <cmath>

namespace qss {

namespace {

constexpr double kNullThreshold = 1e-8;

// Gram-Schmidt step, applied twice. Returns false if v is numerically in the
// span of `basis`; otherwise v is left normalized and orthogonal to it.
bool orthonormalize_against(Eigen::VectorXcd &v, const std::vector<Eigen::VectorXcd> &basis) {
    double before = v.norm();
    for (int pass = 0; pass < 2; pass++) {
        for (const auto &b : basis) {
            v -= b.dot(v) * b;
        }
    }
    double after = v.norm();
    if (after <= kNullThreshold * std::max(before, 1.0)) {
        return false;
    }
    v /= after;
    return true;
}

void require_qualified(const StabilizerCode &code, const SharePartition &partition) {
    if (!is_qualified(code, partition)) {
        throw NotQualifiedError("share set J = " + format_index_set(partition.J()) +
                                " is not qualified: C^perp cap F_q^Jbar differs from C cap F_q^Jbar for Jbar = " +
                                format_index_set(partition.Jbar()));
    }
}

}  // namespace

const QuditState &ReconstructionPlan::phi(size_t secret_label, size_t erased_label) const {
    return phi_J.states.at(secret_label * erased_basis.states.size() + erased_label);
}

double ReconstructionPlan::unitarity_error() const {
    auto d = u_rec.rows();
    return (u_rec.adjoint() * u_rec - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

ErasedCodeBasis build_erased_basis(const StabilizerCode &code, const SharePartition &partition,
                                   const CodewordFamily &codewords, double tol) {
    require_qualified(code, partition);
    AccessAnalysis analysis = analyze(code, partition);
    int q = codewords.q;
    const IndexSet &jbar = partition.Jbar();
    size_t m = jbar.size();

    // Generators of C cap F_q^Jbar, as operators on n qudits (for phase
    // resolution against the codewords) and on the |Jbar| erased qudits.
    SymplecticSubspace restricted = restrict_to(code.stabilizer(), jbar);
    std::vector<SymplecticVector> global_gens = restricted.basis();
    std::vector<SymplecticVector> local_gens;
    for (const auto &g : global_gens) {
        local_gens.push_back(project(g, jbar));
    }
    auto resolved = PhasedStabilizer::resolve(code.n(), global_gens, codewords.words.at(0), tol);
    if (!resolved) {
        throw ReconstructionError("restricted stabilizer does not act diagonally on the codewords");
    }
    PhasedStabilizer local(q, m, local_gens, resolved->phases());

    size_t expected = checked_dim(q, static_cast<size_t>(analysis.ell));
    size_t dim = checked_dim(q, m);
    std::vector<Eigen::VectorXcd> basis;
    for (size_t idx = 0; idx < dim; idx++) {
        Eigen::VectorXcd v = local.project(QuditState::basis(q, m, idx)).amps();
        if (orthonormalize_against(v, basis)) {
            basis.push_back(std::move(v));
        }
    }
    if (basis.size() != expected) {
        throw ReconstructionError("erased-share code has dimension " + std::to_string(basis.size()) + ", expected q^ell = " +
                                  std::to_string(expected));
    }
    ErasedCodeBasis out{partition, analysis.ell, {}};
    for (auto &v : basis) {
        out.states.emplace_back(q, m, std::move(v));
    }
    return out;
}

PhiFamily build_phi_J(const SharePartition &partition, const CodewordFamily &codewords,
                      const ErasedCodeBasis &erased_basis, double tol) {
    size_t erased_count = erased_basis.states.size();
    double expected = 1.0 / std::sqrt(static_cast<double>(erased_count));
    PhiFamily out;
    for (const auto &psi : codewords.words) {
        for (const auto &phi_bar : erased_basis.states) {
            QuditState c = contract(psi, phi_bar, partition.Jbar());
            double nrm = c.norm();
            if (std::abs(nrm - expected) > tol) {
                throw ReconstructionError("contraction norm " + std::to_string(nrm) + " differs from q^(-ell/2) = " +
                                          std::to_string(expected) + " for J = " + format_index_set(partition.J()));
            }
            out.contraction_norms.push_back(nrm);
            out.states.push_back(c.normalized());
        }
    }
    return out;
}

ReconstructionPlan build_u_rec(const StabilizerCode &code, const SharePartition &partition,
                               const CodewordFamily &codewords, ErasedCodeBasis erased_basis, PhiFamily phi_J,
                               double tol) {
    AccessAnalysis analysis = analyze(code, partition);
    int q = codewords.q;
    size_t size_J = partition.J().size();
    size_t k = codewords.k;
    if (analysis.ell < 0 || size_J < k + static_cast<size_t>(analysis.ell)) {
        throw ReconstructionError("|J| < k + ell: no room for the label and secret registers");
    }
    size_t ell = static_cast<size_t>(analysis.ell);
    size_t d = checked_dim(q, size_J);
    size_t secret_dim = checked_dim(q, k);
    size_t label_dim = erased_basis.states.size();
    if (label_dim != checked_dim(q, ell) || phi_J.states.size() != secret_dim * label_dim) {
        throw ReconstructionError("basis sizes disagree with q^k and q^ell");
    }

    for (size_t a = 0; a < phi_J.states.size(); a++) {
        for (size_t b = a; b < phi_J.states.size(); b++) {
            double want = a == b ? 1.0 : 0.0;
            if (std::abs(phi_J.states[a].inner(phi_J.states[b]) - want) > std::max(tol, 1e-9)) {
                throw ReconstructionError("phi_J family is not orthonormal");
            }
        }
    }

    RegisterLayout layout;
    const IndexSet &J = partition.J();
    for (size_t t = 0; t < size_J; t++) {
        if (t < ell) {
            layout.label.push_back(J[t]);
        } else if (t < size_J - k) {
            layout.padding.push_back(J[t]);
        } else {
            layout.secret.push_back(J[t]);
        }
    }

    // Label digits are most significant, the secret digits least significant,
    // padding qudits in between stay |0>.
    size_t label_place = checked_dim(q, size_J - ell);
    std::vector<Eigen::VectorXcd> sources;
    std::vector<size_t> targets;
    std::vector<bool> target_used(d, false);
    for (size_t ik = 0; ik < secret_dim; ik++) {
        for (size_t il = 0; il < label_dim; il++) {
            sources.push_back(phi_J.states[ik * label_dim + il].amps());
            size_t t = il * label_place + ik;
            targets.push_back(t);
            target_used[t] = true;
        }
    }
    for (size_t idx = 0; idx < d && sources.size() < d; idx++) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Unit(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(idx));
        if (orthonormalize_against(v, sources)) {
            sources.push_back(std::move(v));
        }
    }
    for (size_t idx = 0; idx < d; idx++) {
        if (!target_used[idx]) {
            targets.push_back(idx);
        }
    }
    if (sources.size() != d || targets.size() != d) {
        throw ReconstructionError("unitary completion failed");
    }

    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (size_t c = 0; c < d; c++) {
        u.row(static_cast<Eigen::Index>(targets[c])) = sources[c].adjoint();
    }

    return ReconstructionPlan{code,
                              partition,
                              analysis,
                              codewords,
                              std::move(erased_basis),
                              std::move(phi_J),
                              std::move(layout),
                              std::move(u),
                              tol};
}

ReconstructionPlan plan_reconstruction(const StabilizerCode &code, const SharePartition &partition,
                                       const CodewordFamily &codewords, double tol) {
    return plan_reconstruction(code, partition, codewords, build_erased_basis(code, partition, codewords, tol), tol);
}

ReconstructionPlan plan_reconstruction(const StabilizerCode &code, const SharePartition &partition,
                                       const CodewordFamily &codewords, ErasedCodeBasis erased_basis, double tol) {
    require_qualified(code, partition);
    PhiFamily phi = build_phi_J(partition, codewords, erased_basis, tol);
    return build_u_rec(code, partition, codewords, std::move(erased_basis), std::move(phi), tol);
}

QuditState apply_reconstruction(const ReconstructionPlan &plan, const QuditState &shares) {
    if (shares.num_qudits() != plan.code.n() || shares.q() != plan.codewords.q) {
        throw std::invalid_argument("share state does not match the code register");
    }
    return apply_matrix(shares, plan.u_rec, plan.partition.J());
}

ReconstructionReport reconstruct(const ReconstructionPlan &plan, const QuditState &secret) {
    if (secret.q() != plan.codewords.q || secret.num_qudits() != plan.codewords.k) {
        throw std::invalid_argument("secret must be a state on k qudits of dimension q");
    }
    if (!secret.is_normalized(plan.tol)) {
        throw std::invalid_argument("secret is not normalized");
    }
    return reconstruct_from_shares(plan, encode(plan.codewords, secret), secret);
}

ReconstructionReport reconstruct_from_shares(const ReconstructionPlan &plan, const QuditState &shares,
                                             const QuditState &secret) {
    if (!secret.is_normalized(plan.tol)) {
        throw std::invalid_argument("secret is not normalized");
    }
    QuditState out = apply_reconstruction(plan, shares);
    DensityMatrix rho = partial_trace(out, plan.layout.secret);
    double fid = fidelity(rho, secret);
    double purity = rho.purity();
    double residual = trace_distance(rho, DensityMatrix::pure(secret));
    return ReconstructionReport{std::move(out), std::move(rho), fid, purity, residual};
}

ExpansionCheck verify_expansion(const ReconstructionPlan &plan, const std::vector<QuditState> &codewords) {
    size_t label_dim = plan.erased_basis.states.size();
    double scale = 1.0 / std::sqrt(static_cast<double>(label_dim));
    double worst = 0.0;
    if (codewords.size() != plan.codewords.words.size()) {
        return {false, INFINITY};
    }
    for (size_t ik = 0; ik < codewords.size(); ik++) {
        QuditState rebuilt(plan.codewords.q, plan.code.n());
        for (size_t il = 0; il < label_dim; il++) {
            rebuilt.amps() += interleave(plan.erased_basis.states[il], plan.partition.Jbar(), plan.phi(ik, il)).amps();
        }
        rebuilt.amps() *= scale;
        worst = std::max(worst, phase_aligned_deviation(rebuilt, codewords[ik]));
    }
    return {worst <= plan.tol, worst};
}

ExpansionCheck verify_expansion(const ReconstructionPlan &plan) {
    return verify_expansion(plan, plan.codewords.words);
}

}  // namespace qss
