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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "commutant/poly.hpp"

namespace commutant {

struct OracleBudget {
    std::uint64_t max_candidates = 10'000'000;
};

/// Every degree-d polynomial g with f(g(x)) = g(f(x)), found by scanning all
/// (p-1) * p^d degree-d candidates and keeping those that pass the raw
/// composition test. No structure of the answer is assumed anywhere, which is
/// the whole point: this is the referee for the constructive enumeration.
///
/// Candidates (and therefore results) are ordered lexicographically by
/// (c_d, c_(d-1), ..., c_0). Throws OracleTooLargeError when the candidate
/// count exceeds the budget.
std::vector<DensePolynomial> brute_force_commutant(const DensePolynomial& f, std::uint32_t d,
                                                   const OracleBudget& budget = {});

/// Order-insensitive set comparison between a constructed enumeration and the
/// oracle's answer.
struct SetComparison {
    std::size_t constructed_size = 0;
    std::size_t oracle_size = 0;
    std::vector<DensePolynomial> missing;  // in the oracle's set only
    std::vector<DensePolynomial> extra;    // in the constructed set only

    bool pass() const noexcept { return missing.empty() && extra.empty(); }
};

SetComparison compare_sets(const std::vector<DensePolynomial>& constructed,
                           const std::vector<DensePolynomial>& oracle);

}  // namespace commutant
