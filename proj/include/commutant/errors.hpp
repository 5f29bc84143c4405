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
#include <string>

namespace commutant {

// Mixing values that belong to different prime fields.
class FieldMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Degree outside the range the counting and enumeration laws cover
// (monic branch requires d = kp with k <= p).
class UnsupportedDegreeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Brute-force search would exceed the candidate budget.
class OracleTooLargeError : public std::runtime_error {
public:
    OracleTooLargeError(const std::string& message, std::uint64_t required)
        : std::runtime_error(message), required_(required) {}

    // Number of candidate polynomials the request would have scanned,
    // saturated at 2^64 - 1.
    std::uint64_t required_candidates() const noexcept { return required_; }

private:
    std::uint64_t required_;
};

}  // namespace commutant
