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
#include <stdexcept>

#include "commutant/errors.hpp"

namespace commutant {

class Fp;

bool is_prime(std::uint32_t n) noexcept;

/// Fixes the odd prime p. Elements are minted through a context, and
/// operations on elements from different contexts throw FieldMismatchError.
class FieldContext {
public:
    /// Validates p by trial division; rejects p = 2 and non-primes.
    explicit FieldContext(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    /// Reduces an arbitrary signed value into [0, p).
    Fp element(std::int64_t value) const noexcept;
    Fp zero() const noexcept;
    Fp one() const noexcept;

    friend bool operator==(const FieldContext&, const FieldContext&) noexcept = default;

private:
    std::uint32_t p_;
};

/// A residue in [0, p), always fully reduced.
class Fp {
public:
    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Fp operator-() const noexcept { return Fp(value_ == 0 ? 0 : p_ - value_, p_); }

    friend Fp operator+(Fp lhs, Fp rhs) {
        check_same_field(lhs, rhs);
        std::uint32_t s = lhs.value_ + rhs.value_;
        if (s >= lhs.p_) s -= lhs.p_;
        return Fp(s, lhs.p_);
    }

    friend Fp operator-(Fp lhs, Fp rhs) {
        check_same_field(lhs, rhs);
        std::uint32_t s = lhs.value_ + lhs.p_ - rhs.value_;
        if (s >= lhs.p_) s -= lhs.p_;
        return Fp(s, lhs.p_);
    }

    friend Fp operator*(Fp lhs, Fp rhs) {
        check_same_field(lhs, rhs);
        std::uint64_t prod = static_cast<std::uint64_t>(lhs.value_) * rhs.value_;
        return Fp(static_cast<std::uint32_t>(prod % lhs.p_), lhs.p_);
    }

    Fp& operator+=(Fp rhs) { return *this = *this + rhs; }
    Fp& operator-=(Fp rhs) { return *this = *this - rhs; }
    Fp& operator*=(Fp rhs) { return *this = *this * rhs; }

    /// Repeated squaring; pow(0) is one, including for the zero element.
    Fp pow(std::uint64_t exponent) const noexcept;

    /// Throws std::domain_error for the zero element.
    Fp inverse() const;

    friend bool operator==(Fp, Fp) noexcept = default;

private:
    friend class FieldContext;
    Fp(std::uint32_t value, std::uint32_t p) noexcept : value_(value), p_(p) {}

    static void check_same_field(Fp lhs, Fp rhs) {
        if (lhs.p_ != rhs.p_) throw FieldMismatchError("field elements belong to different primes");
    }

    std::uint32_t value_;
    std::uint32_t p_;
};

inline Fp FieldContext::element(std::int64_t value) const noexcept {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint32_t>(r), p_);
}

inline Fp FieldContext::zero() const noexcept { return Fp(0, p_); }
inline Fp FieldContext::one() const noexcept { return Fp(1, p_); }

/// Least r >= 1 with a^r = 1; throws std::domain_error for the zero element.
std::uint32_t multiplicative_order(Fp a);

}  // namespace commutant
