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

#include <cstdint>
#include <vector>

#include "commutant/poly.hpp"

namespace commutant {

/// a*x + b with a != 0, i.e. an invertible affine map of the line.
class LinearPolynomial {
public:
    /// Throws std::invalid_argument when slope is zero.
    LinearPolynomial(Fp slope, Fp shift);

    static LinearPolynomial identity(const FieldContext& field);

    Fp slope() const noexcept { return a_; }
    Fp shift() const noexcept { return b_; }
    std::uint32_t modulus() const noexcept { return a_.modulus(); }
    bool is_identity() const noexcept { return a_.value() == 1 && b_.is_zero(); }

    Fp operator()(Fp x) const { return a_ * x + b_; }

    DensePolynomial to_polynomial() const;

    friend bool operator==(const LinearPolynomial&, const LinearPolynomial&) noexcept = default;

private:
    Fp a_;
    Fp b_;
};

/// outer(inner(x)); affine maps are closed under composition.
LinearPolynomial compose(const LinearPolynomial& outer, const LinearPolynomial& inner);

/// The compositional inverse: (a*x + b)^-1 = a^-1 * x - a^-1 * b.
LinearPolynomial linear_inverse(const LinearPolynomial& lambda);

/// lambda^-1 (P(lambda(x))). Preserves the commuting relation — f commutes
/// with g iff their conjugates do — and preserves degree when deg(P) >= 1.
/// A constant P maps to the constant lambda^-1(P), which is the zero
/// polynomial when P is lambda(0).
DensePolynomial conjugate(const DensePolynomial& P, const LinearPolynomial& lambda);
LinearPolynomial conjugate(const LinearPolynomial& P, const LinearPolynomial& lambda);

enum class CanonicalKind {
    Shift,    // slope 1: canonical form x + 1
    Scaling,  // slope a != 1: canonical form a*x
};

/// The canonical representative of f's similarity class together with the
/// conjugator reaching it: conjugate(f, lambda) == canonical, checked at
/// construction time.
struct CanonicalForm {
    CanonicalKind kind;
    LinearPolynomial canonical;
    LinearPolynomial lambda;
};

/// Throws std::invalid_argument for the identity map, which commutes with
/// everything and has no interesting canonical form.
CanonicalForm canonicalize(const LinearPolynomial& f);

/// Pulls a commutant of the canonical form back along lambda: every member is
/// conjugated by lambda^-1. Preserves order and cardinality.
std::vector<DensePolynomial> transport_commutant(const std::vector<DensePolynomial>& members,
                                                 const LinearPolynomial& lambda);

}  // namespace commutant
