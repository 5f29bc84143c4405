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

#include "commutant/fp.hpp"

namespace commutant {

/// Base-p expansion, least significant digit first. Canonical: no trailing
/// zero digits except for the single-digit expansion of 0.
struct BasePDigits {
    std::vector<std::uint32_t> digits;
    std::uint32_t base = 0;

    std::uint64_t value() const noexcept;
};

BasePDigits base_p_digits(std::uint64_t n, const FieldContext& field);

/// binom(m, n) mod p via Lucas: the product of digitwise binomials of the
/// base-p expansions, zero as soon as a digit of n exceeds the digit of m.
/// Small-case values come from a p-by-p table built once per instance.
class LucasBinomial {
public:
    explicit LucasBinomial(const FieldContext& field);

    Fp operator()(std::uint64_t m, std::uint64_t n) const;

private:
    FieldContext field_;
    std::vector<std::uint32_t> table_;  // row-major, table_[m*p + n]
};

/// One-shot convenience wrapper around LucasBinomial.
Fp binom_lucas(std::uint64_t m, std::uint64_t n, const FieldContext& field);

/// binom(m, n) mod p by the additive Pascal recurrence on residues, never
/// dividing and never consulting base-p digits. Deliberately independent of
/// LucasBinomial so the two can check each other.
class PascalOracle {
public:
    static constexpr std::uint32_t kMaxRow = 512;

    /// Builds rows 0..max_m; throws std::domain_error beyond kMaxRow.
    PascalOracle(const FieldContext& field, std::uint32_t max_m);

    Fp operator()(std::uint32_t m, std::uint32_t n) const;

private:
    FieldContext field_;
    std::uint32_t max_m_;
    std::vector<std::uint32_t> triangle_;  // rows concatenated, row m has m+1 entries
};

/// One-shot convenience wrapper around PascalOracle.
Fp binom_oracle(std::uint32_t m, std::uint32_t n, const FieldContext& field);

/// Checks sum_j binom(m, j) * binom(n - m, k - j) == binom(n, k) mod p,
/// all binomials via Lucas. Requires m <= n.
bool chu_vandermonde_check(std::uint64_t m, std::uint64_t n, std::uint64_t k,
                           const FieldContext& field);

}  // namespace commutant
