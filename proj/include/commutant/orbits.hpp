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
#include <utility>
#include <vector>

#include "commutant/fp.hpp"

namespace commutant {

/// The exponent sets governing degree-kp polynomials that commute with x + 1.
///
///   T_0 = {0}, T_p = {p^2}, and for 0 < k < p
///   T_k = {i + 1 : i in T_(k-1)} union {kp} = {i*p + j : i, j >= 0, i + j = k};
///   R_k = T_0 union ... union T_k;
///   S_k = {0, ..., kp} \ R_k.
///
/// All three vectors are sorted ascending. R and S partition {0, ..., kp};
/// exponents in S are exactly those forced to vanish.
struct OrbitTriple {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> T;
    std::vector<std::uint32_t> R;
    std::vector<std::uint32_t> S;
};

/// Builds T_k, R_k, S_k inductively; requires k <= p (UnsupportedDegreeError).
OrbitTriple build_orbits(const FieldContext& field, std::uint32_t k);

/// R_k and S_k restricted to the top interval [(k-1)p, kp]; requires k >= 1.
struct IntervalRestriction {
    std::vector<std::uint32_t> R;
    std::vector<std::uint32_t> S;
};

IntervalRestriction interval_restrict(const OrbitTriple& orbits);

/// The bijection (i, j) <-> i*p + j used to address T_k for k < p;
/// requires j < p.
std::uint32_t pair_encode(std::uint32_t i, std::uint32_t j, const FieldContext& field);

/// Inverse of pair_encode on T_k; requires k < p and index in T_k.
std::pair<std::uint32_t, std::uint32_t> pair_decode(std::uint32_t index, std::uint32_t k,
                                                    const FieldContext& field);

/// True iff binom(r, s - 1) == 0 mod p for every r in R_k and s in S_k with
/// r != s - 1. (When r = s - 1 the binomial is 1, and the coefficient cascade
/// never uses that pair: it only needs the vanishing for r > s.)
bool orbit_lemma_check(const OrbitTriple& orbits);

}  // namespace commutant
