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

#include "commutant/fp.hpp"

#include <string>

namespace commutant {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldContext::FieldContext(std::uint32_t p) : p_(p) {
    if (p == 2 || !is_prime(p)) {
        throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
    }
}

Fp Fp::pow(std::uint64_t exponent) const noexcept {
    Fp base = *this;
    Fp acc(1, p_);
    while (exponent > 0) {
        if (exponent & 1) acc *= base;
        base *= base;
        exponent >>= 1;
    }
    return acc;
}

Fp Fp::inverse() const {
    if (value_ == 0) throw std::domain_error("zero has no multiplicative inverse");
    return pow(p_ - 2);
}

std::uint32_t multiplicative_order(Fp a) {
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative order");
    Fp acc = a;
    std::uint32_t r = 1;
    while (acc.value() != 1) {
        acc *= a;
        ++r;
    }
    return r;
}

}  // namespace commutant
