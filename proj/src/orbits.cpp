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

#include "commutant/orbits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "commutant/binom.hpp"
#include "commutant/errors.hpp"

namespace commutant {

OrbitTriple build_orbits(const FieldContext& field, std::uint32_t k) {
    const std::uint32_t p = field.modulus();
    if (k > p) {
        throw UnsupportedDegreeError("orbit index k = " + std::to_string(k) +
                                     " exceeds p = " + std::to_string(p));
    }

    OrbitTriple out;
    out.p = p;
    out.k = k;

    std::vector<std::uint32_t> current = {0};  // T_0
    std::vector<std::uint32_t> members;        // accumulates R_k
    members.push_back(0);
    for (std::uint32_t step = 1; step <= k; ++step) {
        if (step < p) {
            for (std::uint32_t& e : current) ++e;
            current.push_back(step * p);
        } else {
            current = {p * p};
        }
        members.insert(members.end(), current.begin(), current.end());
    }
    out.T = current;
    std::sort(out.T.begin(), out.T.end());

    std::sort(members.begin(), members.end());
    out.R = std::move(members);

    const std::uint32_t top = k * p;
    out.S.reserve(top + 1 - out.R.size());
    std::size_t cursor = 0;
    for (std::uint32_t e = 0; e <= top; ++e) {
        if (cursor < out.R.size() && out.R[cursor] == e) {
            ++cursor;
        } else {
            out.S.push_back(e);
        }
    }
    return out;
}

IntervalRestriction interval_restrict(const OrbitTriple& orbits) {
    if (orbits.k < 1) {
        throw std::invalid_argument("interval restriction needs k >= 1");
    }
    const std::uint32_t lo = (orbits.k - 1) * orbits.p;
    const std::uint32_t hi = orbits.k * orbits.p;
    IntervalRestriction out;
    for (std::uint32_t e : orbits.R) {
        if (e >= lo && e <= hi) out.R.push_back(e);
    }
    for (std::uint32_t e : orbits.S) {
        if (e >= lo && e <= hi) out.S.push_back(e);
    }
    return out;
}

std::uint32_t pair_encode(std::uint32_t i, std::uint32_t j, const FieldContext& field) {
    if (j >= field.modulus()) {
        throw std::invalid_argument("pair encoding requires j < p");
    }
    return i * field.modulus() + j;
}

std::pair<std::uint32_t, std::uint32_t> pair_decode(std::uint32_t index, std::uint32_t k,
                                                    const FieldContext& field) {
    const std::uint32_t p = field.modulus();
    if (k >= p) {
        throw std::invalid_argument("pair decoding is defined for k < p");
    }
    std::uint32_t i = index / p;
    std::uint32_t j = index % p;
    if (i + j != k) {
        throw std::invalid_argument("index " + std::to_string(index) + " is not in T_" +
                                    std::to_string(k));
    }
    return {i, j};
}

bool orbit_lemma_check(const OrbitTriple& orbits) {
    FieldContext field(orbits.p);
    LucasBinomial binom(field);
    for (std::uint32_t r : orbits.R) {
        for (std::uint32_t s : orbits.S) {
            // On the diagonal r = s - 1 the binomial is binom(r, r) = 1; the
            // cascade argument only ever consumes the pairs with r > s (plus
            // the trivially zero ones with r < s - 1), so that spot is
            // excluded from the claim.
            if (r + 1 == s) continue;
            if (!binom(r, s - 1).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace commutant
