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

#include "qss/gf.h"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qss {

namespace {

struct ConwayEntry {
    int p;
    int m;
    std::vector<int> coeffs;  // low to high, monic
};

// Conway polynomials C_{p,m} for every extension field of order <= 64.
const std::vector<ConwayEntry> &conway_table() {
    static const std::vector<ConwayEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {5, 2, {2, 4, 1}},
        {7, 2, {3, 6, 1}},
    };
    return table;
}

std::vector<int> to_digits(int v, int p, int m) {
    std::vector<int> d(m);
    for (int i = 0; i < m; i++) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

int from_digits(const std::vector<int> &d, int p) {
    int v = 0;
    for (size_t i = d.size(); i-- > 0;) {
        v = v * p + d[i];
    }
    return v;
}

int poly_mul_mod(int a, int b, int p, int m, const std::vector<int> &poly) {
    auto da = to_digits(a, p, m);
    auto db = to_digits(b, p, m);
    std::vector<int> prod(2 * m - 1, 0);
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < m; j++) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    // Reduce using x^m = -(c_0 + ... + c_{m-1} x^{m-1}).
    for (int deg = 2 * m - 2; deg >= m; deg--) {
        int c = prod[deg];
        if (c == 0) {
            continue;
        }
        prod[deg] = 0;
        for (int i = 0; i < m; i++) {
            prod[deg - m + i] = ((prod[deg - m + i] - c * poly[i]) % p + p) % p;
        }
    }
    prod.resize(m);
    return from_digits(prod, p);
}

}  // namespace

bool is_prime_number(int p) {
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; d++) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

std::pair<int, int> prime_power_decompose(int q) {
    if (q < 2) {
        return {0, 0};
    }
    int p = 2;
    while (q % p != 0) {
        p++;
    }
    int m = 0;
    int r = q;
    while (r % p == 0) {
        r /= p;
        m++;
    }
    if (r != 1) {
        return {0, 0};
    }
    return {p, m};
}

std::shared_ptr<const Field> Field::make(int p, int m) {
    if (!is_prime_number(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (m < 1) {
        throw std::invalid_argument("field extension degree must be >= 1");
    }
    long long q = 1;
    for (int i = 0; i < m; i++) {
        q *= p;
        if (q > kMaxOrder) {
            throw std::invalid_argument(
                "field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds " +
                std::to_string(kMaxOrder));
        }
    }

    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, m});
    if (it != cache.end()) {
        return it->second;
    }

    std::vector<int> poly;
    if (m > 1) {
        for (const auto &e : conway_table()) {
            if (e.p == p && e.m == m) {
                poly = e.coeffs;
            }
        }
        if (poly.empty()) {
            throw std::logic_error("missing Conway polynomial for " + std::to_string(q));
        }
    }
    std::shared_ptr<const Field> f(new Field(p, m, std::move(poly)));
    cache.emplace(std::make_pair(p, m), f);
    return f;
}

std::shared_ptr<const Field> Field::of_order(int q) {
    auto [p, m] = prime_power_decompose(q);
    if (p == 0) {
        throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
    }
    return make(p, m);
}

Field::Field(int p, int m, std::vector<int> poly) : p_(p), m_(m), q_(1), poly_(std::move(poly)) {
    for (int i = 0; i < m; i++) {
        q_ *= p;
    }
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; a++) {
        auto da = to_digits(a, p, m);
        for (int b = 0; b < q_; b++) {
            auto db = to_digits(b, p, m);
            std::vector<int> s(m);
            for (int i = 0; i < m; i++) {
                s[i] = (da[i] + db[i]) % p;
            }
            add_[a * q_ + b] = static_cast<FieldValue>(from_digits(s, p));
            if (m == 1) {
                mul_[a * q_ + b] = static_cast<FieldValue>((a * b) % p);
            } else {
                mul_[a * q_ + b] = static_cast<FieldValue>(poly_mul_mod(a, b, p, m, poly_));
            }
        }
    }
    for (int a = 0; a < q_; a++) {
        for (int b = 0; b < q_; b++) {
            if (add_[a * q_ + b] == 0) {
                neg_[a] = static_cast<FieldValue>(b);
            }
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<FieldValue>(b);
            }
        }
    }
}

FieldValue Field::inv(FieldValue a) const {
    if (a == 0) {
        throw std::domain_error("inverse of zero in " + str());
    }
    return inv_[a];
}

FieldValue Field::pow(FieldValue a, unsigned e) const {
    FieldValue result = 1;
    FieldValue base = a;
    while (e) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement Field::element(int v) const {
    if (!contains(v)) {
        throw std::out_of_range(std::to_string(v) + " is not an element of " + str());
    }
    return FieldElement(*this, static_cast<FieldValue>(v));
}

FieldElement Field::zero() const {
    return FieldElement(*this, 0);
}

FieldElement Field::one() const {
    return FieldElement(*this, 1);
}

std::string Field::str() const {
    std::stringstream ss;
    ss << "GF(" << q_ << ")";
    return ss.str();
}

FieldElement::FieldElement(const Field &field, FieldValue value) : field_(&field), value_(value) {
    if (!field.contains(value)) {
        throw std::out_of_range("value out of range for " + field.str());
    }
}

void FieldElement::check_same_field(const FieldElement &other) const {
    if (field_ != other.field_) {
        throw std::invalid_argument(
            "operation mixes elements of " + field_->str() + " and " + other.field_->str());
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    check_same_field(other);
    return {*field_, field_->add(value_, other.value_)};
}

FieldElement FieldElement::operator-(const FieldElement &other) const {
    check_same_field(other);
    return {*field_, field_->sub(value_, other.value_)};
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    check_same_field(other);
    return {*field_, field_->mul(value_, other.value_)};
}

FieldElement FieldElement::operator/(const FieldElement &other) const {
    check_same_field(other);
    return {*field_, field_->mul(value_, field_->inv(other.value_))};
}

FieldElement FieldElement::operator-() const {
    return {*field_, field_->neg(value_)};
}

FieldElement FieldElement::inv() const {
    return {*field_, field_->inv(value_)};
}

FieldElement FieldElement::pow(unsigned e) const {
    return {*field_, field_->pow(value_, e)};
}

bool FieldElement::operator==(const FieldElement &other) const {
    check_same_field(other);
    return value_ == other.value_;
}

}  // namespace qss
