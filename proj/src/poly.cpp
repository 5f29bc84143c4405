/*
   Copyright 2026 The Commutant Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "commutant/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace commutant {

namespace {

void check_same_field(const DensePolynomial& lhs, const DensePolynomial& rhs) {
    if (!(lhs.field() == rhs.field())) {
        throw FieldMismatchError("polynomials belong to different prime fields");
    }
}

}  // namespace

DensePolynomial DensePolynomial::from_coefficients(const FieldContext& field,
                                                   std::span<const std::int64_t> constant_first) {
    std::vector<std::uint32_t> reduced;
    reduced.reserve(constant_first.size());
    for (std::int64_t c : constant_first) reduced.push_back(field.element(c).value());
    return DensePolynomial(field, std::move(reduced));
}

DensePolynomial DensePolynomial::from_coefficients(
    const FieldContext& field, std::initializer_list<std::int64_t> constant_first) {
    return from_coefficients(field, std::span<const std::int64_t>(constant_first));
}

DensePolynomial DensePolynomial::from_reduced(const FieldContext& field,
                                              std::vector<std::uint32_t> constant_first) {
    for (std::uint32_t c : constant_first) {
        if (c >= field.modulus()) throw std::invalid_argument("coefficient is not reduced mod p");
    }
    return DensePolynomial(field, std::move(constant_first));
}

DensePolynomial DensePolynomial::identity(const FieldContext& field) {
    return DensePolynomial(field, {0, 1});
}

DensePolynomial DensePolynomial::constant(const FieldContext& field, std::int64_t c) {
    return DensePolynomial(field, {field.element(c).value()});
}

DensePolynomial DensePolynomial::monomial(const FieldContext& field, std::uint32_t degree,
                                          std::int64_t coefficient) {
    std::vector<std::uint32_t> reduced(degree + 1, 0);
    reduced[degree] = field.element(coefficient).value();
    return DensePolynomial(field, std::move(reduced));
}

Fp DensePolynomial::operator()(Fp x) const {
    if (field_.modulus() != x.modulus()) {
        throw FieldMismatchError("evaluation point belongs to a different prime field");
    }
    Fp acc = field_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + field_.element(coeffs_[i]);
    }
    return acc;
}

DensePolynomial operator+(const DensePolynomial& lhs, const DensePolynomial& rhs) {
    check_same_field(lhs, rhs);
    const std::uint32_t p = lhs.field_.modulus();
    std::vector<std::uint32_t> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t s = (i < lhs.coeffs_.size() ? lhs.coeffs_[i] : 0) +
                          (i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0);
        out[i] = s >= p ? s - p : s;
    }
    return DensePolynomial(lhs.field_, std::move(out));
}

DensePolynomial operator-(const DensePolynomial& lhs, const DensePolynomial& rhs) {
    check_same_field(lhs, rhs);
    const std::uint32_t p = lhs.field_.modulus();
    std::vector<std::uint32_t> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t s = (i < lhs.coeffs_.size() ? lhs.coeffs_[i] : 0) + p -
                          (i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0);
        out[i] = s >= p ? s - p : s;
    }
    return DensePolynomial(lhs.field_, std::move(out));
}

DensePolynomial operator*(const DensePolynomial& lhs, const DensePolynomial& rhs) {
    check_same_field(lhs, rhs);
    if (lhs.is_zero() || rhs.is_zero()) return DensePolynomial(lhs.field_);
    const std::uint32_t p = lhs.field_.modulus();
    std::vector<std::uint32_t> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            std::uint64_t acc = out[i + j];
            acc += static_cast<std::uint64_t>(lhs.coeffs_[i]) * rhs.coeffs_[j];
            out[i + j] = static_cast<std::uint32_t>(acc % p);
        }
    }
    return DensePolynomial(lhs.field_, std::move(out));
}

DensePolynomial operator*(Fp scalar, const DensePolynomial& rhs) {
    if (scalar.modulus() != rhs.field_.modulus()) {
        throw FieldMismatchError("scalar belongs to a different prime field");
    }
    const std::uint32_t p = rhs.field_.modulus();
    std::vector<std::uint32_t> out(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(scalar.value()) * rhs.coeffs_[i] % p);
    }
    return DensePolynomial(rhs.field_, std::move(out));
}

std::strong_ordering operator<=>(const DensePolynomial& lhs,
                                 const DensePolynomial& rhs) noexcept {
    if (auto c = lhs.field_.modulus() <=> rhs.field_.modulus(); c != 0) return c;
    if (auto c = lhs.coeffs_.size() <=> rhs.coeffs_.size(); c != 0) return c;
    for (std::size_t i = lhs.coeffs_.size(); i-- > 0;) {
        if (auto c = lhs.coeffs_[i] <=> rhs.coeffs_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

namespace detail {

void compose_affine_into(std::span<const std::uint32_t> g, std::uint32_t a, std::uint32_t b,
                         std::uint32_t p, std::vector<std::uint32_t>& out) {
    out.clear();
    if (g.empty()) return;
    const std::size_t n = g.size();
    out.reserve(n);
    out.push_back(g[n - 1]);
    for (std::size_t step = 1; step < n; ++step) {
        // Multiply the running result by a*x + b in place, top index first so
        // every read still sees the previous iteration's values.
        out.push_back(0);
        const std::size_t top = out.size() - 1;
        for (std::size_t idx = top + 1; idx-- > 0;) {
            std::uint64_t acc = idx > 0 ? static_cast<std::uint64_t>(out[idx - 1]) * a : 0;
            if (idx < top) acc += static_cast<std::uint64_t>(out[idx]) * b;
            out[idx] = static_cast<std::uint32_t>(acc % p);
        }
        std::uint32_t s = out[0] + g[n - 1 - step];
        out[0] = s >= p ? s - p : s;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
}

}  // namespace detail

DensePolynomial compose(const DensePolynomial& outer, const DensePolynomial& inner) {
    check_same_field(outer, inner);
    const FieldContext& field = outer.field();
    if (outer.is_zero()) return DensePolynomial(field);
    if (inner.degree().value_or(0) <= 1) {
        // Affine inner polynomial (including constants and zero).
        auto c = inner.coefficients();
        std::uint32_t b = c.size() > 0 ? c[0] : 0;
        std::uint32_t a = c.size() > 1 ? c[1] : 0;
        std::vector<std::uint32_t> out;
        detail::compose_affine_into(outer.coefficients(), a, b, field.modulus(), out);
        return DensePolynomial::from_reduced(field, std::move(out));
    }
    auto coeffs = outer.coefficients();
    DensePolynomial acc = DensePolynomial::constant(field, coeffs[coeffs.size() - 1]);
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        acc = acc * inner + DensePolynomial::constant(field, coeffs[i]);
    }
    return acc;
}

bool commutes(const DensePolynomial& f, const DensePolynomial& g) {
    check_same_field(f, g);
    return compose(f, g) == compose(g, f);
}

DensePolynomial oplus(const DensePolynomial& g, const DensePolynomial& h) {
    check_same_field(g, h);
    return g + h - DensePolynomial::identity(g.field());
}

DensePolynomial oplus_inverse(const DensePolynomial& g) {
    const FieldContext& field = g.field();
    Fp two = field.element(2);
    return two * DensePolynomial::identity(field) - g;
}

std::string to_text(const DensePolynomial& g) {
    if (g.is_zero()) return "0";
    std::string out;
    auto coeffs = g.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const bool unit = coeffs[i] == 1;
        if (i == 0 || !unit) out += std::to_string(coeffs[i]);
        if (i >= 1) {
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace commutant
