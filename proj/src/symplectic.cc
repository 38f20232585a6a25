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

#include "qss/symplectic.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qss {

IndexSet normalize_index_set(IndexSet indices, size_t n) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (auto j : indices) {
        if (j < 1 || j > n) {
            throw std::out_of_range("index " + std::to_string(j) + " outside 1.." + std::to_string(n));
        }
    }
    return indices;
}

IndexSet complement_of(const IndexSet &indices, size_t n) {
    std::vector<bool> in(n + 1, false);
    for (auto j : indices) {
        in.at(j) = true;
    }
    IndexSet out;
    for (size_t j = 1; j <= n; j++) {
        if (!in[j]) {
            out.push_back(j);
        }
    }
    return out;
}

std::string format_index_set(const IndexSet &indices) {
    std::stringstream ss;
    ss << '{';
    for (size_t i = 0; i < indices.size(); i++) {
        if (i) {
            ss << ',';
        }
        ss << indices[i];
    }
    ss << '}';
    return ss.str();
}

SymplecticVector::SymplecticVector(std::shared_ptr<const Field> field, size_t num_qudits)
    : field_(std::move(field)), coords_(2 * num_qudits, 0) {
}

SymplecticVector::SymplecticVector(std::shared_ptr<const Field> field, std::vector<FieldValue> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() % 2 != 0) {
        throw std::invalid_argument("symplectic vector needs an even number of coordinates");
    }
    for (auto c : coords_) {
        if (!field_->contains(c)) {
            throw std::out_of_range("coordinate " + std::to_string(c) + " not in " + field_->str());
        }
    }
}

SymplecticVector SymplecticVector::from_ints(std::shared_ptr<const Field> field, const std::vector<int> &coords) {
    std::vector<FieldValue> raw;
    raw.reserve(coords.size());
    for (int c : coords) {
        if (!field->contains(c)) {
            throw std::out_of_range("coordinate " + std::to_string(c) + " not in " + field->str());
        }
        raw.push_back(static_cast<FieldValue>(c));
    }
    return SymplecticVector(std::move(field), std::move(raw));
}

void SymplecticVector::set(size_t qudit, FieldValue x, FieldValue z) {
    if (!field_->contains(x) || !field_->contains(z)) {
        throw std::out_of_range("coordinate not in " + field_->str());
    }
    coords_.at(2 * qudit) = x;
    coords_.at(2 * qudit + 1) = z;
}

bool SymplecticVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](FieldValue c) { return c == 0; });
}

IndexSet SymplecticVector::support() const {
    IndexSet out;
    for (size_t j = 0; j < num_qudits(); j++) {
        if (x(j) != 0 || z(j) != 0) {
            out.push_back(j + 1);
        }
    }
    return out;
}

SymplecticVector SymplecticVector::operator+(const SymplecticVector &other) const {
    if (field_->order() != other.field_->order() || coords_.size() != other.coords_.size()) {
        throw std::invalid_argument("adding symplectic vectors of different shape");
    }
    SymplecticVector out = *this;
    for (size_t i = 0; i < coords_.size(); i++) {
        out.coords_[i] = field_->add(coords_[i], other.coords_[i]);
    }
    return out;
}

SymplecticVector SymplecticVector::scaled(FieldValue c) const {
    SymplecticVector out = *this;
    for (auto &e : out.coords_) {
        e = field_->mul(e, c);
    }
    return out;
}

bool SymplecticVector::operator==(const SymplecticVector &other) const {
    return field_->order() == other.field_->order() && coords_ == other.coords_;
}

std::string SymplecticVector::str() const {
    std::stringstream ss;
    ss << '(';
    for (size_t i = 0; i < coords_.size(); i++) {
        if (i) {
            ss << ',';
        }
        ss << static_cast<int>(coords_[i]);
    }
    ss << ')';
    return ss.str();
}

FieldElement symplectic_product(const SymplecticVector &x, const SymplecticVector &y) {
    if (&x.field() != &y.field()) {
        throw std::invalid_argument("symplectic product across different fields");
    }
    if (x.num_qudits() != y.num_qudits()) {
        throw std::invalid_argument("symplectic product of vectors with different qudit counts");
    }
    const Field &f = x.field();
    FieldValue acc = 0;
    for (size_t i = 0; i < x.num_qudits(); i++) {
        acc = f.add(acc, f.sub(f.mul(x.x(i), y.z(i)), f.mul(y.x(i), x.z(i))));
    }
    return f.element(acc);
}

SymplecticSubspace::SymplecticSubspace(std::shared_ptr<const Field> field, size_t num_qudits)
    : field_(std::move(field)), n_(num_qudits) {
}

SymplecticSubspace SymplecticSubspace::full(std::shared_ptr<const Field> field, size_t num_qudits) {
    linalg::Rows rows;
    for (size_t i = 0; i < 2 * num_qudits; i++) {
        linalg::Row r(2 * num_qudits, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return from_rows(std::move(field), num_qudits, std::move(rows));
}

bool SymplecticSubspace::contains(const SymplecticVector &v) const {
    if (v.num_qudits() != n_ || v.field().order() != field_->order()) {
        throw std::invalid_argument("membership test with mismatched vector shape");
    }
    linalg::RowEchelon e{rows(), {}};
    for (const auto &b : basis_) {
        size_t p = 0;
        while (b.coords()[p] == 0) {
            p++;
        }
        e.pivots.push_back(p);
    }
    return linalg::in_row_space(*field_, e, v.coords());
}

bool SymplecticSubspace::is_subspace_of(const SymplecticSubspace &other) const {
    return std::all_of(basis_.begin(), basis_.end(), [&](const SymplecticVector &b) { return other.contains(b); });
}

bool SymplecticSubspace::operator==(const SymplecticSubspace &other) const {
    return n_ == other.n_ && field_->order() == other.field_->order() && basis_ == other.basis_;
}

linalg::Rows SymplecticSubspace::rows() const {
    linalg::Rows out;
    out.reserve(basis_.size());
    for (const auto &b : basis_) {
        out.push_back(b.coords());
    }
    return out;
}

SymplecticSubspace from_rows(std::shared_ptr<const Field> field, size_t num_qudits, linalg::Rows rows) {
    auto e = linalg::row_reduce(*field, std::move(rows), 2 * num_qudits);
    SymplecticSubspace out(field, num_qudits);
    for (auto &r : e.rows) {
        out.basis_.emplace_back(field, std::move(r));
    }
    return out;
}

SymplecticSubspace rref(std::shared_ptr<const Field> field, size_t num_qudits,
                        const std::vector<SymplecticVector> &vectors) {
    linalg::Rows rows;
    for (const auto &v : vectors) {
        if (v.num_qudits() != num_qudits || v.field().order() != field->order()) {
            throw std::invalid_argument("rref input vectors must share field and length");
        }
        rows.push_back(v.coords());
    }
    return from_rows(std::move(field), num_qudits, std::move(rows));
}

SymplecticSubspace symplectic_dual(const SymplecticSubspace &s) {
    const Field &f = s.field();
    size_t n = s.num_qudits();
    linalg::Rows constraints;
    for (const auto &y : s.basis()) {
        linalg::Row r(2 * n);
        for (size_t i = 0; i < n; i++) {
            r[2 * i] = y.z(i);
            r[2 * i + 1] = f.neg(y.x(i));
        }
        constraints.push_back(std::move(r));
    }
    return from_rows(s.field_ptr(), n, linalg::nullspace(f, constraints, 2 * n));
}

SymplecticSubspace restrict_to(const SymplecticSubspace &s, const IndexSet &indices) {
    size_t n = s.num_qudits();
    IndexSet inside = normalize_index_set(indices, n);
    IndexSet outside = complement_of(inside, n);
    // Eliminate the outside columns first; rows whose pivot then lands inside
    // I vanish everywhere outside I and span the intersection.
    std::vector<size_t> order;
    for (auto j : outside) {
        order.push_back(2 * (j - 1));
        order.push_back(2 * (j - 1) + 1);
    }
    size_t first_inside = order.size();
    for (auto j : inside) {
        order.push_back(2 * (j - 1));
        order.push_back(2 * (j - 1) + 1);
    }
    auto e = linalg::row_reduce(s.field(), s.rows(), 2 * n, order);
    std::vector<bool> inside_col(2 * n, false);
    for (size_t i = first_inside; i < order.size(); i++) {
        inside_col[order[i]] = true;
    }
    linalg::Rows kept;
    for (size_t r = 0; r < e.rows.size(); r++) {
        if (inside_col[e.pivots[r]]) {
            kept.push_back(e.rows[r]);
        }
    }
    return from_rows(s.field_ptr(), n, std::move(kept));
}

SymplecticVector project(const SymplecticVector &x, const IndexSet &indices) {
    IndexSet idx = normalize_index_set(indices, x.num_qudits());
    SymplecticVector out(x.field_ptr(), idx.size());
    for (size_t t = 0; t < idx.size(); t++) {
        out.set(t, x.x(idx[t] - 1), x.z(idx[t] - 1));
    }
    return out;
}

SymplecticSubspace project(const SymplecticSubspace &s, const IndexSet &indices) {
    std::vector<SymplecticVector> projected;
    for (const auto &b : s.basis()) {
        projected.push_back(project(b, indices));
    }
    return rref(s.field_ptr(), normalize_index_set(indices, s.num_qudits()).size(), projected);
}

SymplecticVector embed(const SymplecticVector &local, const IndexSet &indices, size_t num_qudits) {
    IndexSet idx = normalize_index_set(indices, num_qudits);
    if (idx.size() != local.num_qudits()) {
        throw std::invalid_argument("embed: index set size differs from local vector length");
    }
    SymplecticVector out(local.field_ptr(), num_qudits);
    for (size_t t = 0; t < idx.size(); t++) {
        out.set(idx[t] - 1, local.x(t), local.z(t));
    }
    return out;
}

StabilizerCode::StabilizerCode(std::shared_ptr<const Field> field, size_t n, size_t k,
                               std::vector<SymplecticVector> generators)
    : field_(field),
      n_(n),
      k_(k),
      raw_generators_(std::move(generators)),
      stabilizer_(field, n),
      normalizer_(field, n) {
    if (k > n) {
        throw std::invalid_argument("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    for (const auto &g : raw_generators_) {
        if (&g.field() != field_.get() || g.num_qudits() != n) {
            throw std::invalid_argument("generator " + g.str() + " does not live in F_q^{2n}");
        }
    }
    stabilizer_ = rref(field_, n_, raw_generators_);
    if (stabilizer_.dim() != n_ - k_) {
        throw std::invalid_argument("stabilizer has rank " + std::to_string(stabilizer_.dim()) + ", expected n-k = " +
                                    std::to_string(n_ - k_));
    }
    for (size_t i = 0; i < raw_generators_.size(); i++) {
        for (size_t j = i + 1; j < raw_generators_.size(); j++) {
            if (!symplectic_product(raw_generators_[i], raw_generators_[j]).is_zero()) {
                throw std::invalid_argument("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                            " are not symplectic-orthogonal");
            }
        }
    }
    normalizer_ = symplectic_dual(stabilizer_);
}

SharePartition::SharePartition(size_t n, IndexSet qualified_candidate)
    : n_(n), j_(normalize_index_set(std::move(qualified_candidate), n)), jbar_(complement_of(j_, n)) {
}

SharePartition SharePartition::from_complement(size_t n, const IndexSet &complement) {
    return SharePartition(n, complement_of(normalize_index_set(complement, n), n));
}

bool is_qualified(const StabilizerCode &code, const SharePartition &partition) {
    if (partition.n() != code.n()) {
        throw std::invalid_argument("partition size differs from code length");
    }
    return restrict_to(code.normalizer(), partition.Jbar()) == restrict_to(code.stabilizer(), partition.Jbar());
}

AccessAnalysis analyze(const StabilizerCode &code, const SharePartition &partition) {
    bool qualified = is_qualified(code, partition);
    size_t dim_J = restrict_to(code.stabilizer(), partition.J()).dim();
    size_t dim_Jbar = restrict_to(code.stabilizer(), partition.Jbar()).dim();
    long size_J = static_cast<long>(partition.J().size());
    long size_Jbar = static_cast<long>(partition.Jbar().size());
    long k = static_cast<long>(code.k());
    long ell = size_J - k - static_cast<long>(dim_J);
    AccessAnalysis a{partition, qualified, ell, dim_J, dim_Jbar};
    if (qualified) {
        long d = static_cast<long>(dim_J);
        if (static_cast<long>(dim_Jbar) != size_Jbar - ell || d > size_J - k || d < size_J - k - size_Jbar ||
            ell < 0 || ell > size_Jbar) {
            throw std::logic_error("qualified partition " + format_index_set(partition.J()) +
                                   " violates the access dimension relations");
        }
    }
    return a;
}

}  // namespace qss

namespace qss {

namespace {

// Coefficient row r with r . z = <y, z>.
linalg::Row product_row(const Field &f, const SymplecticVector &y) {
    size_t n = y.num_qudits();
    linalg::Row r(2 * n);
    for (size_t i = 0; i < n; i++) {
        r[2 * i] = f.neg(y.z(i));
        r[2 * i + 1] = y.x(i);
    }
    return r;
}

}  // namespace

LogicalOperators default_logical_operators(const StabilizerCode &code) {
    const Field &f = code.field();
    size_t n = code.n();
    linalg::Rows spanned = code.stabilizer().rows();
    std::vector<SymplecticVector> reps;
    size_t current_rank = spanned.size();
    for (const auto &b : code.normalizer().basis()) {
        spanned.push_back(b.coords());
        size_t r = linalg::rank(f, spanned, 2 * n);
        if (r > current_rank) {
            current_rank = r;
            reps.push_back(b);
        } else {
            spanned.pop_back();
        }
    }
    if (reps.size() != 2 * code.k()) {
        throw std::logic_error("normalizer modulo stabilizer has unexpected dimension");
    }

    LogicalOperators out;
    while (!reps.empty()) {
        SymplecticVector u = reps.front();
        size_t partner = 0;
        FieldValue pairing = 0;
        for (size_t i = 1; i < reps.size(); i++) {
            pairing = symplectic_product(u, reps[i]).value();
            if (pairing != 0) {
                partner = i;
                break;
            }
        }
        if (partner == 0) {
            throw std::logic_error("degenerate symplectic form on normalizer modulo stabilizer");
        }
        SymplecticVector v = reps[partner].scaled(f.inv(pairing));
        reps.erase(reps.begin() + static_cast<long>(partner));
        reps.erase(reps.begin());
        for (auto &w : reps) {
            FieldValue wv = symplectic_product(w, v).value();
            FieldValue wu = symplectic_product(w, u).value();
            w = w + u.scaled(f.neg(wv)) + v.scaled(wu);
        }
        out.x.push_back(std::move(u));
        out.z.push_back(std::move(v));
    }
    return out;
}

LogicalOperators logical_operators_from_x(const StabilizerCode &code, std::vector<SymplecticVector> logical_x) {
    const Field &f = code.field();
    size_t n = code.n();
    size_t k = code.k();
    if (logical_x.size() != k) {
        throw std::invalid_argument("expected " + std::to_string(k) + " logical X vectors, got " +
                                    std::to_string(logical_x.size()));
    }
    for (const auto &x : logical_x) {
        if (x.num_qudits() != n || &x.field() != &f) {
            throw std::invalid_argument("logical X vector " + x.str() + " has the wrong shape");
        }
        if (!code.normalizer().contains(x)) {
            throw std::invalid_argument("logical X vector " + x.str() + " does not commute with the stabilizer");
        }
    }
    for (size_t i = 0; i < k; i++) {
        for (size_t j = i + 1; j < k; j++) {
            if (!symplectic_product(logical_x[i], logical_x[j]).is_zero()) {
                throw std::invalid_argument("logical X vectors " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) + " do not commute");
            }
        }
    }
    linalg::Rows all = code.stabilizer().rows();
    for (const auto &x : logical_x) {
        all.push_back(x.coords());
    }
    if (linalg::rank(f, all, 2 * n) != n) {
        throw std::invalid_argument("logical X vectors are not independent modulo the stabilizer");
    }

    linalg::Rows constraints;
    for (const auto &g : code.stabilizer().basis()) {
        constraints.push_back(product_row(f, g));
    }
    for (const auto &x : logical_x) {
        constraints.push_back(product_row(f, x));
    }
    LogicalOperators out;
    out.x = std::move(logical_x);
    for (size_t j = 0; j < k; j++) {
        linalg::Row rhs(constraints.size(), 0);
        rhs[code.stabilizer().dim() + j] = 1;
        auto z = linalg::solve(f, constraints, rhs, 2 * n);
        if (!z) {
            throw std::logic_error("no logical Z partner exists for logical X " + std::to_string(j + 1));
        }
        SymplecticVector zj(code.field_ptr(), std::move(*z));
        for (size_t jp = 0; jp < j; jp++) {
            FieldValue c = symplectic_product(zj, out.z[jp]).value();
            zj = zj + out.x[jp].scaled(f.neg(c));
        }
        out.z.push_back(std::move(zj));
    }
    return out;
}

}  // namespace qss
