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

#include "qss/oracle.h"

#include <cmath>
#include <set>
#include <sstream>

namespace qss {

namespace {

double enumeration_bits(int q, size_t symbols) {
    return static_cast<double>(symbols) * std::log2(static_cast<double>(q));
}

// Every F_q-combination of the raw generators.
std::set<std::vector<FieldValue>> enumerate_span(const StabilizerCode &code) {
    const Field &f = code.field();
    const auto &gens = code.raw_generators();
    if (enumeration_bits(f.order(), gens.size()) > kEnumerationBudgetBits) {
        throw BudgetExceededError("stabilizer span too large to enumerate");
    }
    std::set<std::vector<FieldValue>> span;
    size_t count = 1;
    for (size_t i = 0; i < gens.size(); i++) {
        count *= static_cast<size_t>(f.order());
    }
    std::vector<FieldValue> acc(2 * code.n());
    for (size_t combo = 0; combo < count; combo++) {
        std::fill(acc.begin(), acc.end(), 0);
        size_t rem = combo;
        for (const auto &g : gens) {
            auto c = static_cast<FieldValue>(rem % static_cast<size_t>(f.order()));
            rem /= static_cast<size_t>(f.order());
            for (size_t t = 0; t < acc.size(); t++) {
                acc[t] = f.add(acc[t], f.mul(c, g.coords()[t]));
            }
        }
        span.insert(acc);
    }
    return span;
}

bool brute_force_with_span(const StabilizerCode &code, const IndexSet &erased,
                           const std::set<std::vector<FieldValue>> &span) {
    const Field &f = code.field();
    size_t n = code.n();
    IndexSet idx = normalize_index_set(erased, n);
    size_t symbols = 2 * idx.size();
    if (enumeration_bits(f.order(), symbols) > kEnumerationBudgetBits) {
        throw BudgetExceededError("2|Jbar| log2 q exceeds the enumeration budget for Jbar = " + format_index_set(idx));
    }
    size_t count = 1;
    for (size_t i = 0; i < symbols; i++) {
        count *= static_cast<size_t>(f.order());
    }
    SymplecticVector e(code.field_ptr(), n);
    for (size_t word = 0; word < count; word++) {
        size_t rem = word;
        for (size_t t = 0; t < idx.size(); t++) {
            auto a = static_cast<FieldValue>(rem % static_cast<size_t>(f.order()));
            rem /= static_cast<size_t>(f.order());
            auto b = static_cast<FieldValue>(rem % static_cast<size_t>(f.order()));
            rem /= static_cast<size_t>(f.order());
            e.set(idx[t] - 1, a, b);
        }
        bool zero_syndrome = true;
        for (const auto &g : code.raw_generators()) {
            if (!symplectic_product(e, g).is_zero()) {
                zero_syndrome = false;
                break;
            }
        }
        if (zero_syndrome && !span.count(e.coords())) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool brute_force_erasure_check(const StabilizerCode &code, const IndexSet &erased) {
    IndexSet idx = normalize_index_set(erased, code.n());
    if (enumeration_bits(code.field().order(), 2 * idx.size()) > kEnumerationBudgetBits) {
        throw BudgetExceededError("2|Jbar| log2 q exceeds the enumeration budget for Jbar = " + format_index_set(idx));
    }
    return brute_force_with_span(code, idx, enumerate_span(code));
}

std::vector<QuditState> probe_secrets(int q, size_t k) {
    size_t d = checked_dim(q, k);
    std::vector<QuditState> out;
    for (size_t i = 0; i < d; i++) {
        out.push_back(QuditState::basis(q, k, i));
    }
    const double h = 1.0 / std::sqrt(2.0);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = i + 1; j < d; j++) {
            for (Complex phase : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
                QuditState s(q, k);
                s.amps()[static_cast<Eigen::Index>(i)] = h;
                s.amps()[static_cast<Eigen::Index>(j)] = h * phase;
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

bool forbidden_check_by_state(const CodewordFamily &codewords, const IndexSet &holders, double tol) {
    IndexSet idx = normalize_index_set(holders, codewords.n);
    int q = codewords.q;
    size_t n = codewords.n;
    std::vector<bool> held(n, false);
    for (auto j : idx) {
        held[j - 1] = true;
    }
    auto dh = static_cast<Eigen::Index>(checked_dim(q, idx.size()));
    auto dr = static_cast<Eigen::Index>(checked_dim(q, n - idx.size()));

    // Each codeword reshaped to (holders) x (rest); the reduced state of a
    // secret alpha is sum_ab alpha_a conj(alpha_b) A_a A_b^dagger.
    std::vector<Eigen::Index> row(checked_dim(q, n));
    std::vector<Eigen::Index> col(row.size());
    for (size_t i = 0; i < row.size(); i++) {
        auto digits = basis_digits(i, q, n);
        Eigen::Index r = 0;
        Eigen::Index c = 0;
        for (size_t t = 0; t < n; t++) {
            if (held[t]) {
                r = r * q + digits[t];
            } else {
                c = c * q + digits[t];
            }
        }
        row[i] = r;
        col[i] = c;
    }
    std::vector<Eigen::MatrixXcd> blocks;
    for (const auto &w : codewords.words) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dh, dr);
        for (size_t i = 0; i < row.size(); i++) {
            a(row[i], col[i]) = w.amps()[static_cast<Eigen::Index>(i)];
        }
        blocks.push_back(std::move(a));
    }

    std::vector<QuditState> probes = probe_secrets(q, codewords.k);
    auto reduced = [&](const QuditState &secret) {
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dh, dh);
        std::vector<Eigen::Index> support;
        for (Eigen::Index a = 0; a < secret.amps().size(); a++) {
            if (secret.amps()[a] != Complex(0.0)) {
                support.push_back(a);
            }
        }
        for (auto a : support) {
            for (auto b : support) {
                rho += secret.amps()[a] * std::conj(secret.amps()[b]) *
                       (blocks[static_cast<size_t>(a)] * blocks[static_cast<size_t>(b)].adjoint());
            }
        }
        return rho;
    };
    auto gap = [](const Eigen::MatrixXcd &x, const Eigen::MatrixXcd &y) {
        return x.size() ? (x - y).cwiseAbs().maxCoeff() : 0.0;
    };

    // Probes within tol/2 of the first one are pairwise within tol of each
    // other, so only the remainder needs an all-pairs comparison.
    Eigen::MatrixXcd reference = reduced(probes[0]);
    std::vector<size_t> unsettled;
    for (size_t p = 1; p < probes.size(); p++) {
        double g = gap(reduced(probes[p]), reference);
        if (g > tol) {
            return false;
        }
        if (g > tol / 2) {
            unsettled.push_back(p);
        }
    }
    for (size_t p : unsettled) {
        Eigen::MatrixXcd rho = reduced(probes[p]);
        for (size_t other = 1; other < probes.size(); other++) {
            if (gap(rho, reduced(probes[other])) > tol) {
                return false;
            }
        }
    }
    return true;
}

char access_code(AccessClass c) {
    switch (c) {
        case AccessClass::Qualified:
            return 'Q';
        case AccessClass::Forbidden:
            return 'F';
        case AccessClass::Intermediate:
            return 'I';
    }
    return '?';
}

bool SubsetVerdict::agrees() const {
    if (state == "mismatch") {
        return false;
    }
    if (brute == 's') {
        return true;
    }
    char expected = algebraic == AccessClass::Intermediate ? '-' : access_code(algebraic);
    return brute == expected;
}

std::string SubsetVerdict::line() const {
    std::stringstream ss;
    ss << "J=" << format_index_set(J) << " eq3=" << access_code(algebraic) << " brute=";
    if (brute == 's') {
        ss << "skipped";
    } else {
        ss << brute;
    }
    ss << " state=" << state;
    return ss.str();
}

bool AccessStructureReport::consistent() const {
    for (const auto &s : subsets) {
        if (!s.agrees()) {
            return false;
        }
    }
    return true;
}

size_t AccessStructureReport::count(AccessClass c) const {
    size_t total = 0;
    for (const auto &s : subsets) {
        total += s.algebraic == c ? 1 : 0;
    }
    return total;
}

AccessStructureReport full_access_structure(const StabilizerCode &code, const std::optional<CodewordFamily> &codewords,
                                            double tol) {
    size_t n = code.n();
    if (n > 12) {
        throw std::invalid_argument("full access structure sweep supports n <= 12");
    }
    std::optional<CodewordFamily> words = codewords;
    if (!words && code.field().is_prime()) {
        try {
            words = synthesize_codewords(code, std::nullopt, std::nullopt, tol);
        } catch (const std::length_error &) {
            // Register too large for dense simulation; state column stays "-".
        }
    }
    std::optional<std::set<std::vector<FieldValue>>> span;
    try {
        span = enumerate_span(code);
    } catch (const BudgetExceededError &) {
    }
    auto brute = [&](const IndexSet &erased) -> std::optional<bool> {
        if (!span || enumeration_bits(code.field().order(), 2 * erased.size()) > kEnumerationBudgetBits) {
            return std::nullopt;
        }
        return brute_force_with_span(code, erased, *span);
    };

    AccessStructureReport report{n, {}};
    size_t total = size_t{1} << n;
    for (size_t mask = 0; mask < total; mask++) {
        IndexSet J;
        for (size_t j = 1; j <= n; j++) {
            if (mask & (size_t{1} << (j - 1))) {
                J.push_back(j);
            }
        }
        IndexSet Jbar = complement_of(J, n);
        SubsetVerdict v{J, AccessClass::Intermediate, '-', "-"};
        if (is_qualified(code, SharePartition(n, J))) {
            v.algebraic = AccessClass::Qualified;
        } else if (is_qualified(code, SharePartition(n, Jbar))) {
            v.algebraic = AccessClass::Forbidden;
        }

        auto jbar_correctable = brute(Jbar);
        auto j_correctable = brute(J);
        if (!jbar_correctable) {
            v.brute = 's';
        } else if (*jbar_correctable) {
            v.brute = 'Q';
        } else if (!j_correctable) {
            v.brute = 's';
        } else {
            v.brute = *j_correctable ? 'F' : '-';
        }

        if (words) {
            bool ok = false;
            switch (v.algebraic) {
                case AccessClass::Qualified:
                    ok = forbidden_check_by_state(*words, Jbar, tol);
                    break;
                case AccessClass::Forbidden:
                    ok = forbidden_check_by_state(*words, J, tol);
                    break;
                case AccessClass::Intermediate:
                    ok = !forbidden_check_by_state(*words, J, tol) && !forbidden_check_by_state(*words, Jbar, tol);
                    break;
            }
            v.state = ok ? "ok" : "mismatch";
        }
        report.subsets.push_back(std::move(v));
    }
    return report;
}

bool DimensionAudit::all_hold() const {
    for (const auto &c : checks) {
        if (c.applicable && !c.holds) {
            return false;
        }
    }
    return true;
}

DimensionAudit audit_dimensions(const StabilizerCode &code, const SharePartition &partition) {
    long n = static_cast<long>(code.n());
    long k = static_cast<long>(code.k());
    long size_J = static_cast<long>(partition.J().size());
    long size_Jbar = static_cast<long>(partition.Jbar().size());

    SymplecticSubspace c_J = restrict_to(code.stabilizer(), partition.J());
    SymplecticSubspace c_Jbar = restrict_to(code.stabilizer(), partition.Jbar());
    SymplecticSubspace dual_Jbar = restrict_to(code.normalizer(), partition.Jbar());
    SymplecticSubspace proj_Jbar = project(code.stabilizer(), partition.Jbar());

    DimensionAudit a{partition, is_qualified(code, partition), c_J.dim(), c_Jbar.dim(), dual_Jbar.dim(),
                     proj_Jbar.dim(), 0, {}};
    long dim_J = static_cast<long>(a.dim_C_J);
    a.ell = size_J - k - dim_J;
    bool q = a.qualified;

    auto add = [&](std::string name, bool applicable, bool holds, std::string detail) {
        a.checks.push_back({std::move(name), applicable, holds, std::move(detail)});
    };
    auto num = [](long v) { return std::to_string(v); };

    add("normalizer_dim", true, static_cast<long>(code.normalizer().dim()) == n + k,
        "dim C^perp = " + num(static_cast<long>(code.normalizer().dim())) + ", n+k = " + num(n + k));
    add("stabilizer_isotropic", true, code.stabilizer().is_subspace_of(code.normalizer()), "C subset C^perp");
    add("erased_containment", true, c_Jbar.is_subspace_of(dual_Jbar), "C cap F^Jbar subset C^perp cap F^Jbar");
    add("qualified_by_dimension", true, q == (a.dim_C_Jbar == a.dim_dual_Jbar),
        "dim C cap F^Jbar = " + num(static_cast<long>(a.dim_C_Jbar)) + ", dim C^perp cap F^Jbar = " +
            num(static_cast<long>(a.dim_dual_Jbar)));
    add("lower_bound", true, size_J - k - size_Jbar <= dim_J,
        num(size_J - k - size_Jbar) + " <= dim C cap F^J = " + num(dim_J));
    add("upper_bound", q, dim_J <= size_J - k, "dim C cap F^J = " + num(dim_J) + " <= |J|-k = " + num(size_J - k));
    add("projection_rank", true, static_cast<long>(a.dim_projection_Jbar) == (n - k) - dim_J,
        "dim P_Jbar(C) = " + num(static_cast<long>(a.dim_projection_Jbar)) + ", (n-k) - dim C cap F^J = " +
            num((n - k) - dim_J));

    SymplecticSubspace local_dual = symplectic_dual(proj_Jbar);
    SymplecticSubspace dual_local = project(dual_Jbar, partition.Jbar());
    add("dual_of_projection", true, local_dual == dual_local, "C^perp cap F^Jbar = P_Jbar(C)^perp inside F^{2|Jbar|}");

    add("ell_range", q, a.ell >= 0 && a.ell <= size_Jbar, "0 <= ell = " + num(a.ell) + " <= |Jbar| = " + num(size_Jbar));
    add("erased_dimension", q, static_cast<long>(a.dim_C_Jbar) == size_Jbar - a.ell,
        "dim C cap F^Jbar = " + num(static_cast<long>(a.dim_C_Jbar)) + ", |Jbar| - ell = " + num(size_Jbar - a.ell));
    return a;
}

}  // namespace qss
