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

#ifndef QSS_GF_H
#define QSS_GF_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qss {

/// Raw canonical encoding of a field element. For F_{p^m} the value is the
/// polynomial sum c_0 + c_1 p + ... + c_{m-1} p^{m-1} of its coefficients.
using FieldValue = uint8_t;

class FieldElement;

/// A finite field F_q with q = p^m <= 64, backed by full lookup tables.
///
/// Extension fields are built over the Conway polynomial for (p, m), so the
/// encoding of every element is fixed. Instances are immutable and shared;
/// `Field::make` returns the same object for the same (p, m).
class Field {
   public:
    static constexpr int kMaxOrder = 64;

    /// Throws std::invalid_argument if p is not prime, m < 1, or p^m > 64.
    static std::shared_ptr<const Field> make(int p, int m = 1);
    /// Field of order q; q must be a prime power <= 64.
    static std::shared_ptr<const Field> of_order(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }
    bool is_prime() const { return m_ == 1; }
    /// Coefficients c_0..c_m (low to high, monic) of the defining polynomial.
    /// Empty for prime fields.
    const std::vector<int> &irreducible_poly() const { return poly_; }

    FieldValue add(FieldValue a, FieldValue b) const { return add_[a * q_ + b]; }
    FieldValue mul(FieldValue a, FieldValue b) const { return mul_[a * q_ + b]; }
    FieldValue neg(FieldValue a) const { return neg_[a]; }
    FieldValue sub(FieldValue a, FieldValue b) const { return add_[a * q_ + neg_[b]]; }
    /// Throws std::domain_error on zero.
    FieldValue inv(FieldValue a) const;
    FieldValue pow(FieldValue a, unsigned e) const;
    bool contains(int v) const { return v >= 0 && v < q_; }

    /// Throws std::out_of_range unless 0 <= v < q.
    FieldElement element(int v) const;
    FieldElement zero() const;
    FieldElement one() const;

    std::string str() const;

   private:
    Field(int p, int m, std::vector<int> poly);

    int p_;
    int m_;
    int q_;
    std::vector<int> poly_;
    std::vector<FieldValue> add_;
    std::vector<FieldValue> mul_;
    std::vector<FieldValue> neg_;
    std::vector<FieldValue> inv_;
};

bool is_prime_number(int p);

/// Returns {p, m} with q = p^m, or {0, 0} if q is not a prime power.
std::pair<int, int> prime_power_decompose(int q);

/// An element of a specific field. Mixing elements of different fields in
/// one operation throws std::invalid_argument.
class FieldElement {
   public:
    FieldElement(const Field &field, FieldValue value);

    const Field &field() const { return *field_; }
    FieldValue value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator/(const FieldElement &other) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(unsigned e) const;

    bool operator==(const FieldElement &other) const;
    bool operator!=(const FieldElement &other) const { return !(*this == other); }

   private:
    void check_same_field(const FieldElement &other) const;

    const Field *field_;
    FieldValue value_;
};

}  // namespace qss

#endif
