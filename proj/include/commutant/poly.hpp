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

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commutant/fp.hpp"

namespace commutant {

/// Dense polynomial over F_p, coefficients stored constant term first.
///
/// Canonical form: the zero polynomial is the empty coefficient vector, and a
/// nonzero polynomial never stores a zero leading coefficient. The degree of
/// the zero polynomial is nullopt (the "minus infinity" of the degree map),
/// never an integer. Instances are immutable once constructed.
class DensePolynomial {
public:
    /// The zero polynomial.
    explicit DensePolynomial(const FieldContext& field) : field_(field) {}

    /// Reduces arbitrary signed coefficients mod p and trims trailing zeros.
    static DensePolynomial from_coefficients(const FieldContext& field,
                                             std::span<const std::int64_t> constant_first);
    static DensePolynomial from_coefficients(const FieldContext& field,
                                             std::initializer_list<std::int64_t> constant_first);

    /// Takes already-reduced residues; trims trailing zeros.
    static DensePolynomial from_reduced(const FieldContext& field,
                                        std::vector<std::uint32_t> constant_first);

    /// The identity x.
    static DensePolynomial identity(const FieldContext& field);
    static DensePolynomial constant(const FieldContext& field, std::int64_t c);
    static DensePolynomial monomial(const FieldContext& field, std::uint32_t degree,
                                    std::int64_t coefficient);

    const FieldContext& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::optional<std::uint32_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<std::uint32_t>(coeffs_.size() - 1);
    }

    /// Zero for every index beyond the stored range.
    Fp coefficient(std::uint32_t i) const noexcept {
        return field_.element(i < coeffs_.size() ? coeffs_[i] : 0);
    }

    /// Raw reduced residues, constant term first.
    std::span<const std::uint32_t> coefficients() const noexcept { return coeffs_; }

    /// Horner evaluation.
    Fp operator()(Fp x) const;

    friend DensePolynomial operator+(const DensePolynomial& lhs, const DensePolynomial& rhs);
    friend DensePolynomial operator-(const DensePolynomial& lhs, const DensePolynomial& rhs);
    friend DensePolynomial operator*(const DensePolynomial& lhs, const DensePolynomial& rhs);
    friend DensePolynomial operator*(Fp scalar, const DensePolynomial& rhs);

    friend bool operator==(const DensePolynomial& lhs, const DensePolynomial& rhs) noexcept {
        return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
    }

    /// Total order used for deterministic set comparisons: modulus, then
    /// degree, then coefficients from the leading term down.
    friend std::strong_ordering operator<=>(const DensePolynomial& lhs,
                                            const DensePolynomial& rhs) noexcept;

private:
    DensePolynomial(const FieldContext& field, std::vector<std::uint32_t> reduced)
        : field_(field), coeffs_(std::move(reduced)) {
        trim();
    }

    void trim() noexcept {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    FieldContext field_;
    std::vector<std::uint32_t> coeffs_;
};

/// outer(inner(x)).
DensePolynomial compose(const DensePolynomial& outer, const DensePolynomial& inner);

/// f(g(x)) == g(f(x)), compared exactly.
bool commutes(const DensePolynomial& f, const DensePolynomial& g);

/// The group operation g(x) + h(x) - x on polynomials commuting with x + 1.
DensePolynomial oplus(const DensePolynomial& g, const DensePolynomial& h);

/// The oplus-inverse 2x - g; oplus(g, oplus_inverse(g)) is the identity x.
DensePolynomial oplus_inverse(const DensePolynomial& g);

/// Human-readable form, descending degree, zero terms omitted: "2x^6 + x + 1".
std::string to_text(const DensePolynomial& g);

namespace detail {

/// out := g(a*x + b) where g is given constant-first as reduced residues mod p.
/// Reuses out's capacity; callers in tight loops keep one buffer alive.
void compose_affine_into(std::span<const std::uint32_t> g, std::uint32_t a, std::uint32_t b,
                         std::uint32_t p, std::vector<std::uint32_t>& out);

}  // namespace detail

}  // namespace commutant
