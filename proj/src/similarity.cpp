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

#include "commutant/similarity.hpp"

#include <stdexcept>

namespace commutant {

LinearPolynomial::LinearPolynomial(Fp slope, Fp shift) : a_(slope), b_(shift) {
    if (slope.modulus() != shift.modulus()) {
        throw FieldMismatchError("slope and shift belong to different prime fields");
    }
    if (slope.is_zero()) {
        throw std::invalid_argument("a linear polynomial needs a nonzero slope");
    }
}

LinearPolynomial LinearPolynomial::identity(const FieldContext& field) {
    return LinearPolynomial(field.one(), field.zero());
}

DensePolynomial LinearPolynomial::to_polynomial() const {
    FieldContext field(modulus());
    return DensePolynomial::from_reduced(field, {b_.value(), a_.value()});
}

LinearPolynomial compose(const LinearPolynomial& outer, const LinearPolynomial& inner) {
    return LinearPolynomial(outer.slope() * inner.slope(), outer(inner.shift()));
}

LinearPolynomial linear_inverse(const LinearPolynomial& lambda) {
    Fp inv_a = lambda.slope().inverse();
    return LinearPolynomial(inv_a, -(inv_a * lambda.shift()));
}

DensePolynomial conjugate(const DensePolynomial& P, const LinearPolynomial& lambda) {
    if (P.field().modulus() != lambda.modulus()) {
        throw FieldMismatchError("polynomial and conjugator belong to different prime fields");
    }
    LinearPolynomial inv = linear_inverse(lambda);
    DensePolynomial inner = compose(P, lambda.to_polynomial());
    return compose(inv.to_polynomial(), inner);
}

LinearPolynomial conjugate(const LinearPolynomial& P, const LinearPolynomial& lambda) {
    return compose(linear_inverse(lambda), compose(P, lambda));
}

CanonicalForm canonicalize(const LinearPolynomial& f) {
    if (f.is_identity()) {
        throw std::invalid_argument("the identity map has no canonical form");
    }
    FieldContext field(f.modulus());
    const Fp a = f.slope();
    const Fp b = f.shift();

    if (a.value() != 1) {
        // Kill the shift: x + (c - b)/(a - 1) sends a*x + b to a*x + c; take c = 0.
        LinearPolynomial canonical(a, field.zero());
        LinearPolynomial lambda(field.one(), (field.zero() - b) * (a - field.one()).inverse());
        if (conjugate(f, lambda) == canonical) {
            return {CanonicalKind::Scaling, canonical, lambda};
        }
        lambda = linear_inverse(lambda);
        if (conjugate(f, lambda) == canonical) {
            return {CanonicalKind::Scaling, canonical, lambda};
        }
        throw std::logic_error("scaling conjugator failed verification");
    }

    // Slope 1, shift b != 0: rescale the shift to 1 with lambda = b*x.
    LinearPolynomial canonical(field.one(), field.one());
    LinearPolynomial lambda(b, field.zero());
    if (conjugate(f, lambda) == canonical) {
        return {CanonicalKind::Shift, canonical, lambda};
    }
    lambda = linear_inverse(lambda);
    if (conjugate(f, lambda) == canonical) {
        return {CanonicalKind::Shift, canonical, lambda};
    }
    throw std::logic_error("shift conjugator failed verification");
}

std::vector<DensePolynomial> transport_commutant(const std::vector<DensePolynomial>& members,
                                                 const LinearPolynomial& lambda) {
    LinearPolynomial inv = linear_inverse(lambda);
    std::vector<DensePolynomial> out;
    out.reserve(members.size());
    for (const DensePolynomial& g : members) {
        out.push_back(conjugate(g, inv));
    }
    return out;
}

}  // namespace commutant
