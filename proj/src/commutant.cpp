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

#include "commutant/commutant.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "commutant/binom.hpp"
#include "commutant/errors.hpp"

namespace commutant {

namespace {

std::uint64_t checked_scale_pow(std::uint32_t p, std::uint64_t base_factor, std::uint32_t exponent) {
    unsigned __int128 acc = base_factor;
    for (std::uint32_t i = 0; i < exponent; ++i) {
        acc *= p;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("commutant cardinality exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

// The sparse coefficient vector of orbit_generator(j, 1) - x, as
// (exponent, residue) pairs.
std::vector<std::pair<std::uint32_t, std::uint32_t>> orbit_basis(const FieldContext& field,
                                                                 std::uint32_t j) {
    const std::uint32_t p = field.modulus();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
    if (j == p) {
        entries.emplace_back(1, p - 1);      // -x
        entries.emplace_back(p * p, 1);
        return entries;
    }
    LucasBinomial binom(field);
    for (std::uint32_t i = 0; i <= j; ++i) {
        Fp c = binom(j, i);
        if (i % 2 == 1) c = -c;
        entries.emplace_back((j - i) * p + i, c.value());
    }
    return entries;
}

void validate_orbit_index(const FieldContext& field, std::uint32_t j) {
    if (j < 1 || j > field.modulus()) {
        throw std::domain_error("orbit index " + std::to_string(j) + " is outside 1..p");
    }
}

}  // namespace

CommutantSpec::CommutantSpec(LinearPolynomial f_, std::uint32_t degree_)
    : f(std::move(f_)), degree(degree_) {
    if (f.is_identity()) {
        throw std::invalid_argument("the identity map commutes with every polynomial");
    }
}

std::uint64_t count(const CommutantSpec& spec) {
    const std::uint32_t p = spec.f.modulus();
    const std::uint32_t d = spec.degree;
    const Fp a = spec.f.slope();

    if (a.value() != 1) {
        // Degree 0: the only candidate is f's fixed point b/(1-a), a valid
        // member exactly when it is a nonzero constant, i.e. when b != 0.
        if (d == 0) return spec.f.shift().is_zero() ? 0 : 1;
        const std::uint32_t r = multiplicative_order(a);
        if ((d - 1) % r != 0) return 0;
        return checked_scale_pow(p, p - 1, (d - 1) / r);
    }

    if (d == 0) return 0;
    // Degree 1: translations commute with each other, so all p maps x + c
    // qualify. This is the one degree not divisible by p with members; the
    // divisibility argument compares the coefficient of x^(d-1) and needs
    // d >= 2 to dodge f's constant term.
    if (d == 1) return p;
    if (d % p != 0) return 0;
    const std::uint32_t k = d / p;
    if (k > p) {
        throw UnsupportedDegreeError("degree " + std::to_string(d) + " exceeds p^2 = " +
                                     std::to_string(p * p) +
                                     "; the counting law stops there");
    }
    return checked_scale_pow(p, p - 1, k);
}

std::map<std::uint32_t, Fp> dependency_chain(const FieldContext& field, std::uint32_t j, Fp t) {
    const std::uint32_t p = field.modulus();
    if (j < 1 || j >= p) {
        throw std::domain_error("dependency chain needs 1 <= j < p");
    }
    if (t.modulus() != p) {
        throw FieldMismatchError("chain parameter belongs to a different prime field");
    }
    std::map<std::uint32_t, Fp> chain;
    Fp current = t;  // c at pair (j, 0), exponent j*p
    chain.emplace(j * p, current);
    for (std::uint32_t i = 0; i < j; ++i) {
        // (j - i) c_(j-i, i) = -(i + 1) c_(j-i-1, i+1)
        current = -(field.element(j - i) * current) * field.element(i + 1).inverse();
        chain.emplace((j - i - 1) * p + (i + 1), current);
    }
    return chain;
}

DensePolynomial orbit_generator(const FieldContext& field, std::uint32_t j, Fp t) {
    validate_orbit_index(field, j);
    if (t.modulus() != field.modulus()) {
        throw FieldMismatchError("orbit parameter belongs to a different prime field");
    }
    const std::uint32_t p = field.modulus();
    const std::uint32_t top = j * p;
    std::vector<std::uint32_t> coeffs(top + 1, 0);
    coeffs[1] = 1;
    for (auto [exponent, value] : orbit_basis(field, j)) {
        std::uint64_t scaled = static_cast<std::uint64_t>(value) * t.value() % p;
        std::uint32_t s = coeffs[exponent] + static_cast<std::uint32_t>(scaled);
        coeffs[exponent] = s >= p ? s - p : s;
    }
    return DensePolynomial::from_reduced(field, std::move(coeffs));
}

DensePolynomial monic_member(const FieldContext& field, const MonicParameterVector& params) {
    const std::uint32_t p = field.modulus();
    const std::uint32_t k = static_cast<std::uint32_t>(params.t.size());
    if (k < 1 || k > p) {
        throw UnsupportedDegreeError("parameter vector length must be in 1..p");
    }
    if (params.t.back().is_zero()) {
        throw std::invalid_argument("the leading orbit parameter must be nonzero");
    }
    std::vector<std::uint32_t> coeffs(k * p + 1, 0);
    coeffs[0] = params.c0.value();
    coeffs[1] = 1;
    for (std::uint32_t j = 1; j <= k; ++j) {
        const Fp t = params.t[j - 1];
        if (t.modulus() != p || params.c0.modulus() != p) {
            throw FieldMismatchError("parameter belongs to a different prime field");
        }
        if (t.is_zero()) continue;
        for (auto [exponent, value] : orbit_basis(field, j)) {
            std::uint64_t scaled = static_cast<std::uint64_t>(value) * t.value() % p;
            std::uint32_t s = coeffs[exponent] + static_cast<std::uint32_t>(scaled);
            coeffs[exponent] = s >= p ? s - p : s;
        }
    }
    return DensePolynomial::from_reduced(field, std::move(coeffs));
}

std::vector<DensePolynomial> enumerate_monic(const FieldContext& field, std::uint32_t k) {
    const std::uint32_t p = field.modulus();
    if (k == 0) return {};
    if (k > p) {
        throw UnsupportedDegreeError("orbit count k = " + std::to_string(k) +
                                     " exceeds p = " + std::to_string(p));
    }

    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> basis;
    basis.reserve(k);
    for (std::uint32_t j = 1; j <= k; ++j) basis.push_back(orbit_basis(field, j));

    const std::uint32_t top = k * p;
    std::vector<DensePolynomial> out;
    out.reserve(checked_scale_pow(p, p - 1, k));

    // Odometer over (t_k, ..., t_1, c0); the constant term spins fastest.
    std::vector<std::uint32_t> params(k + 1, 0);
    params[0] = 1;  // t_k
    std::vector<std::uint32_t> coeffs;
    while (true) {
        coeffs.assign(top + 1, 0);
        coeffs[0] = params[k];
        coeffs[1] = 1;
        for (std::uint32_t j = 1; j <= k; ++j) {
            const std::uint32_t t = params[k - j];
            if (t == 0) continue;
            for (auto [exponent, value] : basis[j - 1]) {
                std::uint64_t scaled = static_cast<std::uint64_t>(value) * t % p;
                std::uint32_t s = coeffs[exponent] + static_cast<std::uint32_t>(scaled);
                coeffs[exponent] = s >= p ? s - p : s;
            }
        }
        out.push_back(DensePolynomial::from_reduced(field, coeffs));

        std::size_t pos = params.size();
        while (pos-- > 0) {
            if (++params[pos] < p) break;
            params[pos] = 0;
        }
        if (pos == static_cast<std::size_t>(-1)) break;  // t_k wrapped past p-1
    }
    return out;
}

std::vector<DensePolynomial> enumerate_nonmonic(Fp a, std::uint32_t d) {
    if (a.is_zero() || a.value() == 1) {
        throw std::invalid_argument("this branch needs a slope other than 0 and 1");
    }
    FieldContext field(a.modulus());
    const std::uint32_t p = field.modulus();
    if (d == 0) return {};
    const std::uint32_t r = multiplicative_order(a);
    if ((d - 1) % r != 0) return {};

    // Exponents that may carry a nonzero coefficient, leading one first.
    std::vector<std::uint32_t> support;
    for (std::uint32_t e = d;; e -= r) {
        support.push_back(e);
        if (e == 1) break;
    }

    std::vector<DensePolynomial> out;
    out.reserve(checked_scale_pow(p, p - 1, static_cast<std::uint32_t>(support.size() - 1)));

    std::vector<std::uint32_t> values(support.size(), 0);
    values[0] = 1;  // leading coefficient
    std::vector<std::uint32_t> coeffs;
    while (true) {
        coeffs.assign(d + 1, 0);
        for (std::size_t i = 0; i < support.size(); ++i) coeffs[support[i]] = values[i];
        out.push_back(DensePolynomial::from_reduced(field, coeffs));

        std::size_t pos = values.size();
        while (pos-- > 0) {
            if (++values[pos] < p) break;
            values[pos] = 0;
        }
        if (pos == static_cast<std::size_t>(-1)) break;  // leading coefficient wrapped
    }
    return out;
}

std::vector<DensePolynomial> enumerate(const CommutantSpec& spec) {
    FieldContext field(spec.f.modulus());

    if (spec.degree == 0) {
        // Handled on f itself rather than through the canonical form: the
        // degree-0 members are the nonzero fixed points of f, and conjugation
        // does not preserve them (the fixed point of a*x is the zero
        // polynomial, which has no degree).
        const Fp a = spec.f.slope();
        const Fp b = spec.f.shift();
        if (a.value() == 1 || b.is_zero()) return {};
        Fp fixed = b * (field.one() - a).inverse();
        return {DensePolynomial::constant(field, fixed.value())};
    }

    CanonicalForm canon = canonicalize(spec.f);

    std::vector<DensePolynomial> members;
    if (canon.kind == CanonicalKind::Scaling) {
        members = enumerate_nonmonic(canon.canonical.slope(), spec.degree);
    } else {
        const std::uint32_t p = field.modulus();
        if (spec.degree == 1) {
            // Every translation x + c commutes with x + 1; listed by
            // ascending constant.
            members.reserve(p);
            for (std::uint32_t c = 0; c < p; ++c) {
                members.push_back(DensePolynomial::from_reduced(field, {c, 1}));
            }
        } else if (spec.degree % p != 0) {
            members = {};
        } else {
            const std::uint32_t k = spec.degree / p;
            if (k > p) {
                throw UnsupportedDegreeError("degree " + std::to_string(spec.degree) +
                                             " exceeds p^2 = " + std::to_string(p * p) +
                                             "; the enumeration stops there");
            }
            members = enumerate_monic(field, k);
        }
    }

    if (canon.lambda.is_identity()) return members;
    return transport_commutant(members, canon.lambda);
}

}  // namespace commutant
