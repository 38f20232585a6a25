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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails. Tolerances are fixed below.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qss/golden.h"
#include "qss/oracle.h"
#include "qss/reconstruct.h"
#include "support/test_util.h"

using namespace qss;

namespace {

constexpr double kStateTol = 1e-9;
constexpr size_t kRandomCodesPerField = 120;
constexpr size_t kSecretsPerSet = 5;
constexpr size_t kSymplecticTriples = 10000;
constexpr uint64_t kSeed = 20261016;

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> failures;

    void fail(const std::string &what) {
        pass = false;
        if (failures.size() < 10) {
            failures.push_back(what);
        }
    }
};

struct SampledCode {
    StabilizerCode code;
    CodewordFamily words;
};

std::vector<SampledCode> sample_codes(std::mt19937_64 &rng) {
    std::vector<SampledCode> out;
    for (int q : {2, 3}) {
        for (size_t i = 0; i < kRandomCodesPerField; i++) {
            size_t n = std::uniform_int_distribution<size_t>(1, 5)(rng);
            size_t k = std::uniform_int_distribution<size_t>(0, n)(rng);
            auto code = qss::testing::random_code(rng, q, n, k);
            auto words = synthesize_codewords(code);
            out.push_back({std::move(code), std::move(words)});
        }
    }
    return out;
}

std::string describe(const StabilizerCode &code, const IndexSet &J) {
    std::ostringstream ss;
    ss << "q=" << code.field().order() << " n=" << code.n() << " k=" << code.k() << " J=" << format_index_set(J);
    return ss.str();
}

std::string sci(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

Outcome golden_reproduction() {
    Outcome o;
    auto checks = run_golden(default_golden_dir(), kGoldenTol);
    size_t passed = 0;
    for (const auto &c : checks) {
        if (c.pass) {
            passed++;
        } else {
            o.fail(c.name + ": " + c.detail);
        }
    }
    o.summary = std::to_string(passed) + "/" + std::to_string(checks.size()) + " golden checks, tol " +
                sci(kGoldenTol);
    return o;
}

Outcome five_qubit_access_structure() {
    Outcome o;
    auto code = qss::testing::five_qubit_code();
    size_t qualified = 0;
    for (const auto &J : qss::testing::all_subsets(5)) {
        SharePartition p(5, J);
        bool algebraic = is_qualified(code, p);
        bool brute = brute_force_erasure_check(code, p.Jbar());
        bool threshold = J.size() >= 3;
        qualified += algebraic ? 1 : 0;
        if (algebraic != brute || algebraic != threshold) {
            o.fail("J=" + format_index_set(J) + " algebraic=" + std::to_string(algebraic) +
                   " brute=" + std::to_string(brute) + " threshold=" + std::to_string(threshold));
        }
    }
    auto report = full_access_structure(code);
    if (!report.consistent()) {
        o.fail("full access structure report is inconsistent");
    }
    o.summary = "32 subsets, " + std::to_string(qualified) + " qualified, exact";
    return o;
}

Outcome random_oracle_agreement(const std::vector<SampledCode> &codes) {
    Outcome o;
    size_t subsets = 0;
    size_t audited = 0;
    for (const auto &s : codes) {
        for (const auto &J : qss::testing::all_subsets(s.code.n())) {
            SharePartition p(s.code.n(), J);
            subsets++;
            bool algebraic = is_qualified(s.code, p);
            if (algebraic != brute_force_erasure_check(s.code, p.Jbar())) {
                o.fail(describe(s.code, J) + ": algebraic and brute-force verdicts differ");
            }
            if (algebraic != qss::testing::erasure_correctable_by_enumeration(s.code, p.Jbar())) {
                o.fail(describe(s.code, J) + ": algebraic and test-side enumeration verdicts differ");
            }
            auto audit = audit_dimensions(s.code, p);
            if (audit.qualified) {
                audited++;
            }
            for (const auto &c : audit.checks) {
                if (c.applicable && !c.holds) {
                    o.fail(describe(s.code, J) + ": " + c.name + " (" + c.detail + ")");
                }
            }
        }
    }
    o.summary = std::to_string(codes.size()) + " codes, " + std::to_string(subsets) + " subsets, " +
                std::to_string(audited) + " qualified sets audited, exact";
    return o;
}

Outcome reconstruction_properties(const std::vector<SampledCode> &codes, std::mt19937_64 &rng) {
    Outcome o;
    size_t sets = 0;
    size_t runs = 0;
    for (const auto &s : codes) {
        const auto &code = s.code;
        int q = code.field().order();
        for (const auto &J : qss::testing::all_subsets(code.n())) {
            SharePartition p(code.n(), J);
            if (!is_qualified(code, p)) {
                continue;
            }
            sets++;
            std::string where = describe(code, J);
            try {
                auto plan = plan_reconstruction(code, p, s.words, kStateTol);
                double expected_norm = std::pow(static_cast<double>(q), -0.5 * static_cast<double>(plan.analysis.ell));
                for (double nrm : plan.phi_J.contraction_norms) {
                    if (std::abs(nrm - expected_norm) > kStateTol) {
                        o.fail(where + ": contraction norm " + std::to_string(nrm));
                    }
                }
                if (plan.unitarity_error() > kStateTol) {
                    o.fail(where + ": unitarity error " + std::to_string(plan.unitarity_error()));
                }

                auto basis = build_erased_basis(code, p, s.words, kStateTol);
                auto w = qss::testing::random_unitary(rng, basis.states.size());
                ErasedCodeBasis rotated{basis.partition, basis.ell, {}};
                for (size_t i = 0; i < basis.states.size(); i++) {
                    QuditState r(q, p.Jbar().size());
                    for (size_t j = 0; j < basis.states.size(); j++) {
                        r = r + basis.states[j] * w(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
                    }
                    rotated.states.push_back(r);
                }
                auto rotated_plan = plan_reconstruction(code, p, s.words, rotated, kStateTol);

                IndexSet rest = complement_of(plan.layout.secret, code.n());
                std::optional<Eigen::MatrixXcd> residual_reference;
                for (size_t t = 0; t < kSecretsPerSet; t++) {
                    runs++;
                    auto secret = qss::testing::random_state(rng, q, code.k());
                    auto report = reconstruct(plan, secret);
                    if (report.secret_fidelity < 1 - kStateTol) {
                        o.fail(where + ": fidelity " + std::to_string(report.secret_fidelity));
                    }
                    if (report.purity_of_secret_register < 1 - kStateTol) {
                        o.fail(where + ": purity " + std::to_string(report.purity_of_secret_register));
                    }
                    auto residual = partial_trace(report.output_state, rest);
                    if (!residual_reference) {
                        residual_reference = residual.entries();
                    } else {
                        double d = trace_distance(residual, DensityMatrix(q, rest.size(), *residual_reference));
                        if (d > kStateTol) {
                            o.fail(where + ": residual state depends on the secret, distance " + std::to_string(d));
                        }
                    }

                    if (reconstruct(rotated_plan, secret).secret_fidelity < 1 - kStateTol) {
                        o.fail(where + ": rotated erased basis loses fidelity");
                    }

                    std::vector<int> xs(code.n(), 0);
                    std::vector<int> zs(code.n(), 0);
                    std::uniform_int_distribution<int> digit(0, q - 1);
                    for (auto j : p.Jbar()) {
                        xs[j - 1] = digit(rng);
                        zs[j - 1] = digit(rng);
                    }
                    auto disturbed = PauliOperator(q, xs, zs).apply(encode(s.words, secret));
                    if (reconstruct_from_shares(plan, disturbed, secret).secret_fidelity < 1 - kStateTol) {
                        o.fail(where + ": Pauli error on erased shares loses fidelity");
                    }
                }
            } catch (const std::exception &e) {
                o.fail(where + ": " + e.what());
            }
        }
    }
    o.summary = std::to_string(sets) + " qualified sets, " + std::to_string(runs) + " secrets, tol " +
                sci(kStateTol);
    return o;
}

Outcome forbidden_witness(const std::vector<SampledCode> &codes) {
    Outcome o;
    size_t forbidden = 0;
    size_t subsets = 0;
    for (const auto &s : codes) {
        size_t n = s.code.n();
        for (const auto &J : qss::testing::all_subsets(n)) {
            subsets++;
            bool complement_qualified = is_qualified(s.code, SharePartition::from_complement(n, J));
            bool by_state = forbidden_check_by_state(s.words, J, kStateTol);
            if (complement_qualified) {
                forbidden++;
                if (!by_state) {
                    o.fail(describe(s.code, J) + ": forbidden set leaks information");
                }
            } else if (by_state) {
                o.fail(describe(s.code, J) + ": reduced state is secret-independent but complement is not qualified");
            }
        }
    }
    o.summary = std::to_string(forbidden) + " forbidden sets witnessed, duality on " + std::to_string(subsets) +
                " subsets, tol " + sci(kStateTol);
    return o;
}

Outcome field_exactness(std::mt19937_64 &rng) {
    Outcome o;
    size_t fields = 0;
    size_t all_fields = 0;
    for (int q = 2; q <= Field::kMaxOrder; q++) {
        auto [p, m] = prime_power_decompose(q);
        if (p == 0) {
            continue;
        }
        auto f = Field::make(p, m);
        std::string name = f->str();
        all_fields++;
        if (q <= 16) {
            fields++;
            for (int a = 0; a < q; a++) {
                auto ea = static_cast<FieldValue>(a);
                if (f->add(ea, 0) != ea || f->mul(ea, 1) != ea || f->add(ea, f->neg(ea)) != 0) {
                    o.fail(name + ": identity or negation fails at " + std::to_string(a));
                }
                if (a != 0 && f->mul(ea, f->inv(ea)) != 1) {
                    o.fail(name + ": inverse fails at " + std::to_string(a));
                }
                for (int b = 0; b < q; b++) {
                    auto eb = static_cast<FieldValue>(b);
                    if (!f->contains(f->add(ea, eb)) || !f->contains(f->mul(ea, eb)) ||
                        f->add(ea, eb) != f->add(eb, ea) || f->mul(ea, eb) != f->mul(eb, ea)) {
                        o.fail(name + ": closure or commutativity fails");
                    }
                    for (int c = 0; c < q; c++) {
                        auto ec = static_cast<FieldValue>(c);
                        if (f->add(f->add(ea, eb), ec) != f->add(ea, f->add(eb, ec)) ||
                            f->mul(f->mul(ea, eb), ec) != f->mul(ea, f->mul(eb, ec)) ||
                            f->mul(ea, f->add(eb, ec)) != f->add(f->mul(ea, eb), f->mul(ea, ec))) {
                            o.fail(name + ": associativity or distributivity fails");
                        }
                    }
                }
            }
        }

        std::uniform_int_distribution<int> scalar(0, q - 1);
        std::uniform_int_distribution<size_t> length(1, 4);
        for (size_t t = 0; t < kSymplecticTriples; t++) {
            size_t n = length(rng);
            auto x = qss::testing::random_vector(rng, f, n);
            auto y = qss::testing::random_vector(rng, f, n);
            auto z = qss::testing::random_vector(rng, f, n);
            auto c = static_cast<FieldValue>(scalar(rng));
            auto fc = f->element(c);
            bool ok = symplectic_product(x, x).is_zero() &&
                      symplectic_product(x + y.scaled(c), z) == symplectic_product(x, z) + fc * symplectic_product(y, z) &&
                      symplectic_product(z, x + y.scaled(c)) == symplectic_product(z, x) + fc * symplectic_product(z, y);
            if (!ok) {
                o.fail(name + ": symplectic form fails on " + x.str() + ", " + y.str() + ", " + z.str());
            }
        }
    }
    o.summary = std::to_string(fields) + " fields exhaustively, form on " + std::to_string(kSymplecticTriples) +
                " triples in each of " + std::to_string(all_fields) + " fields, exact";
    return o;
}

bool report(const std::string &label, const std::string &title, const Outcome &o, double seconds) {
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << label << ' ' << title << ": " << o.summary << " ("
              << static_cast<int>(seconds * 1000) << " ms)\n";
    for (const auto &f : o.failures) {
        std::cout << "       " << f << '\n';
    }
    return o.pass;
}

template <typename F>
bool timed(const std::string &label, const std::string &title, F &&body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o.fail(std::string("exception: ") + e.what());
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return report(label, title, o, elapsed.count());
}

}  // namespace

int main() {
    std::mt19937_64 rng(kSeed);
    std::vector<SampledCode> codes = sample_codes(rng);

    bool ok = true;
    ok &= timed("AC1", "golden [[5,1,3]] reproduction", golden_reproduction);
    ok &= timed("AC2", "[[5,1,3]] access structure", five_qubit_access_structure);
    ok &= timed("AC3", "randomized oracle agreement", [&] { return random_oracle_agreement(codes); });
    ok &= timed("AC4", "reconstruction properties", [&] { return reconstruction_properties(codes, rng); });
    ok &= timed("AC5", "forbidden-set witness", [&] { return forbidden_witness(codes); });
    ok &= timed("AC6", "field-layer exactness", [&] { return field_exactness(rng); });
    std::cout << (ok ? "all acceptance criteria pass" : "acceptance FAILED") << '\n';
    return ok ? 0 : 1;
}
