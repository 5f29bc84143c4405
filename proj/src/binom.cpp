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

#include "commutant/binom.hpp"

#include <stdexcept>
#include <string>

namespace commutant {

std::uint64_t BasePDigits::value() const noexcept {
    std::uint64_t acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        acc = acc * base + digits[i];
    }
    return acc;
}

BasePDigits base_p_digits(std::uint64_t n, const FieldContext& field) {
    BasePDigits out;
    out.base = field.modulus();
    do {
        out.digits.push_back(static_cast<std::uint32_t>(n % out.base));
        n /= out.base;
    } while (n > 0);
    return out;
}

LucasBinomial::LucasBinomial(const FieldContext& field) : field_(field) {
    const std::uint32_t p = field.modulus();
    table_.assign(static_cast<std::size_t>(p) * p, 0);
    for (std::uint32_t m = 0; m < p; ++m) {
        table_[static_cast<std::size_t>(m) * p] = 1;
        for (std::uint32_t n = 1; n <= m; ++n) {
            std::uint32_t above = table_[static_cast<std::size_t>(m - 1) * p + n];
            std::uint32_t left = table_[static_cast<std::size_t>(m - 1) * p + n - 1];
            std::uint32_t s = above + left;
            table_[static_cast<std::size_t>(m) * p + n] = s >= p ? s - p : s;
        }
    }
}

Fp LucasBinomial::operator()(std::uint64_t m, std::uint64_t n) const {
    const std::uint32_t p = field_.modulus();
    std::uint64_t acc = 1;
    while (m > 0 || n > 0) {
        std::uint32_t md = static_cast<std::uint32_t>(m % p);
        std::uint32_t nd = static_cast<std::uint32_t>(n % p);
        if (nd > md) return field_.zero();
        acc = acc * table_[static_cast<std::size_t>(md) * p + nd] % p;
        m /= p;
        n /= p;
    }
    return field_.element(static_cast<std::int64_t>(acc));
}

Fp binom_lucas(std::uint64_t m, std::uint64_t n, const FieldContext& field) {
    return LucasBinomial(field)(m, n);
}

PascalOracle::PascalOracle(const FieldContext& field, std::uint32_t max_m)
    : field_(field), max_m_(max_m) {
    if (max_m > kMaxRow) {
        throw std::domain_error("Pascal oracle row bound exceeded: " + std::to_string(max_m));
    }
    const std::uint32_t p = field.modulus();
    triangle_.reserve(static_cast<std::size_t>(max_m + 1) * (max_m + 2) / 2);
    for (std::uint32_t m = 0; m <= max_m; ++m) {
        std::size_t row = triangle_.size();
        std::size_t prev = row - m;
        triangle_.push_back(1);
        for (std::uint32_t n = 1; n < m; ++n) {
            std::uint32_t s = triangle_[prev + n - 1] + triangle_[prev + n];
            triangle_.push_back(s >= p ? s - p : s);
        }
        if (m > 0) triangle_.push_back(1);
    }
}

Fp PascalOracle::operator()(std::uint32_t m, std::uint32_t n) const {
    if (m > max_m_) {
        throw std::domain_error("Pascal oracle queried beyond its precomputed rows");
    }
    if (n > m) return field_.zero();
    std::size_t row = static_cast<std::size_t>(m) * (m + 1) / 2;
    return field_.element(triangle_[row + n]);
}

Fp binom_oracle(std::uint32_t m, std::uint32_t n, const FieldContext& field) {
    return PascalOracle(field, m)(m, n);
}

bool chu_vandermonde_check(std::uint64_t m, std::uint64_t n, std::uint64_t k,
                           const FieldContext& field) {
    if (m > n) throw std::invalid_argument("Chu-Vandermonde check requires m <= n");
    LucasBinomial binom(field);
    Fp sum = field.zero();
    for (std::uint64_t j = 0; j <= k; ++j) {
        sum += binom(m, j) * binom(n - m, k - j);
    }
    return sum == binom(n, k);
}

}  // namespace commutant
