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
#include <map>
#include <vector>

#include "commutant/similarity.hpp"

namespace commutant {

/// A request for C_d(f) = { g : deg g = d, f(g(x)) = g(f(x)) } over F_p.
///
/// For d >= 1 the structure of C_d(f) depends only on the similarity class
/// of f:
///
///   slope a != 1, r = ord(a):  |C_d(a*x + b)| = (p-1) * p^((d-1)/r) when
///                              d == 1 (mod r), and C_d is empty otherwise;
///   slope 1, shift b != 0:     |C_1(x + b)| = p (all translations x + c
///                              commute with each other); for d >= 2,
///                              |C_d(x + b)| = (p-1) * p^k when d = k*p with
///                              1 <= k <= p, empty when p does not divide d,
///                              and out of scope when d > p^2 (x^(p^3)
///                              commutes with x + 1, so degrees past p^2 are
///                              nonempty but not covered here).
///
/// Degree 0 is not similarity-invariant: the only degree-0 candidate is a
/// nonzero constant fixed by f, so |C_0(a*x + b)| = 1 when a != 1 and b != 0
/// (the fixed point b/(1-a)) and 0 otherwise.
struct CommutantSpec {
    LinearPolynomial f;
    std::uint32_t degree;

    /// Throws std::invalid_argument when f is the identity (its commutant is
    /// every polynomial, which none of the laws here describe).
    CommutantSpec(LinearPolynomial f_, std::uint32_t degree_);
};

/// |C_d(f)| by the counting laws above. Throws UnsupportedDegreeError on the
/// slope-1 branch when d = k*p with k > p, and std::overflow_error when the
/// count exceeds 2^64 - 1.
std::uint64_t count(const CommutantSpec& spec);

/// Every member of C_d(f), built constructively (no search): the commutant of
/// the canonical form is assembled from orbit generators or the allowed
/// support pattern, then pulled back along the canonicalizing conjugation.
/// Deterministic order; see enumerate_monic and enumerate_nonmonic.
std::vector<DensePolynomial> enumerate(const CommutantSpec& spec);

/// C_kp(x + 1), ordered lexicographically by (t_k, ..., t_1, c0) with each
/// parameter running through 0..p-1 (t_k from 1). k = 0 yields the empty set;
/// k > p throws UnsupportedDegreeError.
std::vector<DensePolynomial> enumerate_monic(const FieldContext& field, std::uint32_t k);

/// C_d(a*x) for a != 0, 1: polynomials supported on exponents congruent to
/// 1 mod ord(a), ordered lexicographically by the allowed coefficients from
/// the leading one down.
std::vector<DensePolynomial> enumerate_nonmonic(Fp a, std::uint32_t d);

/// Coefficients on T_j forced by choosing c at exponent j*p:
///   (j) c_(j,0) = -c_(j-1,1),  (j-1) c_(j-1,1) = -2 c_(j-2,2),  ...
/// solved left to right, keyed by exponent i*p + j'. Requires 1 <= j < p so
/// every division is by a unit. In closed form the value at exponent
/// (j-i)*p + i is (-1)^i * binom(j, i) * t.
std::map<std::uint32_t, Fp> dependency_chain(const FieldContext& field, std::uint32_t j, Fp t);

/// The member of C_jp(x + 1) parameterized by t on orbit j:
///   j < p:  x + sum of the dependency-chain coefficients on T_j;
///   j = p:  t*x^(p^2) + (1 - t)*x.
/// Requires 1 <= j <= p.
DensePolynomial orbit_generator(const FieldContext& field, std::uint32_t j, Fp t);

/// Free parameters of a member of C_kp(x + 1): one t per orbit 1..k plus the
/// constant term. t.back() is the leading parameter and must be nonzero.
struct MonicParameterVector {
    std::vector<Fp> t;
    Fp c0;
};

/// x + t_1*B_1 + ... + t_k*B_k + c0 where B_j = orbit_generator(j, 1) - x.
/// Distinct parameter vectors give distinct members: the coefficient at
/// exponent j*p reads back t_j and the constant term reads back c0.
DensePolynomial monic_member(const FieldContext& field, const MonicParameterVector& params);

}  // namespace commutant
