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

#include "qss/golden.h"

#include <cmath>
#include <sstream>

#include "qss/io.h"
#include "qss/reconstruct.h"

#ifndef QSS_DATA_DIR
#define QSS_DATA_DIR "data"
#endif

namespace qss {

namespace {

// Reference phi_J(i1, i2 i3) on shares 3,4,5, each term with amplitude 1/2.
struct PhiEntry {
    int secret;
    int label;
    const char *terms;
};

constexpr PhiEntry kPhiTable[] = {
    {0, 0, "+000 -110 -011 +101"}, {0, 1, "+001 +010 -111 -100"}, {0, 2, "+010 +100 -001 -111"},
    {0, 3, "-011 -000 -101 -110"}, {1, 0, "-100 -111 -010 -001"}, {1, 1, "+101 +011 -110 -000"},
    {1, 2, "+110 +101 -000 -011"}, {1, 3, "+111 -001 -100 +010"},
};

QuditState qubit_terms(const std::string &terms, size_t num_qubits, double amplitude) {
    QuditState s(2, num_qubits);
    std::istringstream ss(terms);
    std::string t;
    while (ss >> t) {
        double sign = t[0] == '-' ? -1.0 : 1.0;
        size_t index = std::stoul(t.substr(1), nullptr, 2);
        s.amps()[static_cast<Eigen::Index>(index)] += sign * amplitude;
    }
    return s;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << v;
    return ss.str();
}

}  // namespace

std::string default_golden_dir() {
    return std::string(QSS_DATA_DIR) + "/five_qubit";
}

std::vector<GoldenCheck> run_golden(const std::string &data_dir, double tol) {
    std::vector<GoldenCheck> checks;
    auto add = [&](std::string name, bool pass, std::string detail) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };

    std::optional<StabilizerCode> code;
    std::optional<QuditState> psi0;
    std::optional<QuditState> psi1;
    try {
        code = load_code(data_dir + "/code.txt");
        psi0 = load_state(data_dir + "/psi0.state");
        psi1 = load_state(data_dir + "/psi1.state");
        add("load_data", true, data_dir);
    } catch (const std::exception &e) {
        add("load_data", false, e.what());
        return checks;
    }

    // (a) Both codewords lie in one stabilizer eigenspace.
    auto stab = PhasedStabilizer::resolve(code->n(), code->raw_generators(), *psi0, tol);
    add("codeword_psi0", stab.has_value(), stab ? "psi(0) fixed by g_1..g_4" : "psi(0) is not a stabilizer eigenvector");
    bool psi1_ok = stab && verify_codeword(*stab, *psi1, tol);
    add("codeword_psi1", psi1_ok, psi1_ok ? "psi(1) fixed by the same phased generators" : "psi(1) rejected");
    if (!stab || !psi1_ok) {
        add("pipeline", false, "codeword checks failed; reconstruction skipped");
        return checks;
    }

    // (b) Qualification and ell.
    SharePartition partition(5, {3, 4, 5});
    AccessAnalysis analysis = analyze(*code, partition);
    add("qualified_J345", analysis.qualified && analysis.ell == 2,
        std::string(analysis.qualified ? "qualified" : "not qualified") + " ell=" + std::to_string(analysis.ell));

    std::optional<ReconstructionPlan> plan;
    try {
        CodewordFamily family = codewords_from_states(*code, {*psi0, *psi1}, tol);
        plan = plan_reconstruction(*code, partition, family, tol);
        add("plan", true, "U_rec built on shares {3,4,5}");
    } catch (const std::exception &e) {
        add("plan", false, e.what());
        return checks;
    }

    // Erased-share basis is the computational basis of shares 1,2.
    double worst = 0.0;
    for (size_t i = 0; i < 4; i++) {
        worst = std::max(worst, phase_aligned_deviation(plan->erased_basis.states.at(i), QuditState::basis(2, 2, i)));
    }
    add("erased_basis", plan->erased_basis.states.size() == 4 && worst <= kGoldenTol, "max deviation " + fmt(worst));

    double worst_norm = 0.0;
    for (double nrm : plan->phi_J.contraction_norms) {
        worst_norm = std::max(worst_norm, std::abs(nrm - 0.5));
    }
    add("equal_length", worst_norm <= kGoldenTol, "max |norm - 1/2| " + fmt(worst_norm));

    // (c) The eight phi_J states.
    for (const auto &entry : kPhiTable) {
        QuditState expected = qubit_terms(entry.terms, 3, 0.5);
        double dev = phase_aligned_deviation(plan->phi(entry.secret, entry.label), expected);
        std::string label = std::to_string(entry.secret) + "," + std::to_string(entry.label >> 1) +
                            std::to_string(entry.label & 1);
        add("phi_J(" + label + ")", dev <= kGoldenTol, "max deviation " + fmt(dev));
    }

    // (d) U_rec phi_J(i1, i2 i3) = |i2 i3>|i1>.
    double worst_action = 0.0;
    for (int i1 = 0; i1 < 2; i1++) {
        for (int lab = 0; lab < 4; lab++) {
            QuditState image(2, 3, plan->u_rec * plan->phi(i1, lab).amps());
            QuditState target = QuditState::basis(2, 3, static_cast<size_t>(lab * 2 + i1));
            worst_action = std::max(worst_action, (image.amps() - target.amps()).cwiseAbs().maxCoeff());
        }
    }
    add("u_rec_action", worst_action <= kGoldenTol, "max deviation " + fmt(worst_action));
    double unitarity = plan->unitarity_error();
    add("u_rec_unitary", unitarity <= kGoldenTol, "max |U'U - I| " + fmt(unitarity));

    auto expansion = verify_expansion(*plan);
    add("codeword_expansion", expansion.ok, "max deviation " + fmt(expansion.max_deviation));

    // (e) Final product state for the secret 0.6|0> + 0.8|1>.
    QuditState secret(2, 1);
    secret.amps() << 0.6, 0.8;
    ReconstructionReport report = reconstruct(*plan, secret);
    QuditState expected_out = qubit_terms("+0000 +0101 +1010 +1111", 4, 0.5).tensor(secret);
    double out_dev = (report.output_state.amps() - expected_out.amps()).cwiseAbs().maxCoeff();
    add("final_state", out_dev <= kGoldenTol, "max deviation " + fmt(out_dev));
    add("secret_fidelity", report.secret_fidelity >= 1.0 - kGoldenTol,
        "fidelity " + std::to_string(report.secret_fidelity));

    // Every Pauli error on shares 1,2 leaves the secret intact.
    double worst_fid = 1.0;
    QuditState shares = encode(plan->codewords, secret);
    for (int e = 1; e < 16; e++) {
        std::vector<int> x = {e & 1, (e >> 2) & 1, 0, 0, 0};
        std::vector<int> z = {(e >> 1) & 1, (e >> 3) & 1, 0, 0, 0};
        QuditState disturbed = PauliOperator(2, x, z).apply(shares);
        worst_fid = std::min(worst_fid, reconstruct_from_shares(*plan, disturbed, secret).secret_fidelity);
    }
    add("erased_share_errors", worst_fid >= 1.0 - kGoldenTol, "min fidelity " + std::to_string(worst_fid));
    return checks;
}

}  // namespace qss
