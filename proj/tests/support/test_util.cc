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

#include "test_util.h"

#include <cmath>
#include <stdexcept>

namespace qss::testing {

StabilizerCode five_qubit_code() {
    auto f = Field::make(2);
    std::vector<std::vector<int>> rows = {
        {1, 0, 0, 1, 0, 1, 1, 0, 0, 0},
        {0, 0, 1, 0, 0, 1, 0, 1, 1, 0},
        {1, 0, 0, 0, 1, 0, 0, 1, 0, 1},
        {0, 1, 1, 0, 0, 0, 1, 0, 0, 1},
    };
    std::vector<SymplecticVector> gens;
    for (const auto &r : rows) {
        gens.push_back(SymplecticVector::from_ints(f, r));
    }
    return StabilizerCode(f, 5, 1, gens);
}

QuditState five_qubit_psi(int logical) {
    static const char *zero[] = {"+00000", "+10010", "+01001", "+10100", "+01010", "-11011", "-00110", "-11000",
                                 "-11101", "-00011", "-11110", "-01111", "-10001", "-01100", "-10111", "+00101"};
    static const char *one[] = {"+11111", "+01101", "+10110", "+01011", "+10101", "-00100", "-11001", "-00111",
                                "-00010", "-11100", "-00001", "-10000", "-01110", "-10011", "-01000", "+11010"};
    QuditState s(2, 5);
    for (const char *term : logical == 0 ? zero : one) {
        std::string t(term);
        s.amps()[static_cast<Eigen::Index>(std::stoul(t.substr(1), nullptr, 2))] = (t[0] == '-' ? -0.25 : 0.25);
    }
    return s;
}

SymplecticVector random_vector(std::mt19937_64 &rng, const std::shared_ptr<const Field> &field, size_t n) {
    std::uniform_int_distribution<int> d(0, field->order() - 1);
    std::vector<int> c(2 * n);
    for (auto &e : c) {
        e = d(rng);
    }
    return SymplecticVector::from_ints(field, c);
}

StabilizerCode random_code(std::mt19937_64 &rng, int q, size_t n, size_t k) {
    auto f = Field::of_order(q);
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<SymplecticVector> gens;
    SymplecticSubspace current(f, n);
    while (gens.size() < n - k) {
        SymplecticSubspace normal = symplectic_dual(current);
        SymplecticVector v(f, n);
        for (const auto &b : normal.basis()) {
            v = v + b.scaled(static_cast<FieldValue>(d(rng)));
        }
        if (current.contains(v)) {
            continue;
        }
        gens.push_back(v);
        current = rref(f, n, gens);
    }
    return StabilizerCode(f, n, k, gens);
}

QuditState random_state(std::mt19937_64 &rng, int q, size_t m) {
    std::normal_distribution<double> g;
    QuditState s(q, m);
    for (Eigen::Index i = 0; i < s.amps().size(); i++) {
        s.amps()[i] = Complex(g(rng), g(rng));
    }
    return s.normalized();
}

Eigen::MatrixXcd random_unitary(std::mt19937_64 &rng, size_t d) {
    std::normal_distribution<double> g;
    auto n = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            a(i, j) = Complex(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

std::set<std::vector<FieldValue>> span_by_enumeration(const StabilizerCode &code) {
    const Field &f = code.field();
    std::set<std::vector<FieldValue>> out;
    out.insert(std::vector<FieldValue>(2 * code.n(), 0));
    for (const auto &g : code.raw_generators()) {
        std::set<std::vector<FieldValue>> next;
        for (const auto &v : out) {
            for (int c = 0; c < f.order(); c++) {
                auto w = v;
                for (size_t i = 0; i < w.size(); i++) {
                    w[i] = f.add(w[i], f.mul(static_cast<FieldValue>(c), g.coords()[i]));
                }
                next.insert(w);
            }
        }
        out = std::move(next);
    }
    return out;
}

size_t dim_vanishing_outside_by_count(const StabilizerCode &code, const IndexSet &inside) {
    std::vector<bool> in(code.n() + 1, false);
    for (auto j : inside) {
        in[j] = true;
    }
    size_t count = 0;
    for (const auto &v : span_by_enumeration(code)) {
        bool ok = true;
        for (size_t j = 1; j <= code.n() && ok; j++) {
            if (!in[j] && (v[2 * (j - 1)] != 0 || v[2 * (j - 1) + 1] != 0)) {
                ok = false;
            }
        }
        count += ok ? 1 : 0;
    }
    size_t dim = 0;
    size_t p = 1;
    while (p < count) {
        p *= static_cast<size_t>(code.field().order());
        dim++;
    }
    if (p != count) {
        throw std::logic_error("subspace size is not a power of q");
    }
    return dim;
}

bool erasure_correctable_by_enumeration(const StabilizerCode &code, const IndexSet &erased) {
    const Field &f = code.field();
    auto span = span_by_enumeration(code);
    size_t symbols = 2 * erased.size();
    size_t total = 1;
    for (size_t i = 0; i < symbols; i++) {
        total *= static_cast<size_t>(f.order());
    }
    for (size_t word = 0; word < total; word++) {
        std::vector<FieldValue> e(2 * code.n(), 0);
        size_t rem = word;
        for (size_t t = 0; t < erased.size(); t++) {
            for (int part = 0; part < 2; part++) {
                e[2 * (erased[t] - 1) + part] = static_cast<FieldValue>(rem % f.order());
                rem /= f.order();
            }
        }
        bool commutes = true;
        for (const auto &g : code.raw_generators()) {
            int acc = 0;
            for (size_t i = 0; i < code.n(); i++) {
                acc = f.add(acc, f.sub(f.mul(e[2 * i], g.coords()[2 * i + 1]), f.mul(g.coords()[2 * i], e[2 * i + 1])));
            }
            commutes = commutes && acc == 0;
        }
        if (commutes && !span.count(e)) {
            return false;
        }
    }
    return true;
}

std::vector<IndexSet> all_subsets(size_t n) {
    std::vector<IndexSet> out;
    for (size_t mask = 0; mask < (size_t{1} << n); mask++) {
        IndexSet s;
        for (size_t j = 1; j <= n; j++) {
            if (mask & (size_t{1} << (j - 1))) {
                s.push_back(j);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace qss::testing
