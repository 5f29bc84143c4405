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

#include "commutant/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "commutant/errors.hpp"

namespace commutant {

namespace {

std::uint64_t candidate_count(std::uint32_t p, std::uint32_t d) noexcept {
    unsigned __int128 acc = p - 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        acc *= p;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(acc);
}

// Advance (c_d, ..., c_0) to the next tuple in lexicographic order; the
// constant term spins fastest and the leading coefficient stays nonzero.
bool advance(std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
    std::size_t pos = 0;
    while (pos < coeffs.size()) {
        if (++coeffs[pos] < p) return true;
        coeffs[pos] = 0;
        ++pos;
    }
    return false;  // the leading coefficient wrapped past p-1
}

}  // namespace

std::vector<DensePolynomial> brute_force_commutant(const DensePolynomial& f, std::uint32_t d,
                                                   const OracleBudget& budget) {
    const FieldContext& field = f.field();
    const std::uint32_t p = field.modulus();

    const std::uint64_t required = candidate_count(p, d);
    if (required > budget.max_candidates) {
        throw OracleTooLargeError(
            "brute force over degree " + std::to_string(d) + " needs " +
                std::to_string(required) + " candidates, budget is " +
                std::to_string(budget.max_candidates),
            required);
    }

    const bool linear_f = f.degree() == 1u;
    const std::uint32_t fa = linear_f ? f.coefficients()[1] : 0;
    const std::uint32_t fb = linear_f ? f.coefficients()[0] : 0;

    std::vector<DensePolynomial> out;
    std::vector<std::uint32_t> coeffs(d + 1, 0);
    coeffs[d] = 1;
    std::vector<std::uint32_t> rhs;
    do {
        bool keep;
        if (linear_f) {
            // f(g) = a*g + b; g(f) by direct substitution.
            detail::compose_affine_into(coeffs, fa, fb, p, rhs);
            keep = rhs.size() == coeffs.size();
            for (std::size_t i = 0; keep && i < coeffs.size(); ++i) {
                std::uint64_t lhs = static_cast<std::uint64_t>(fa) * coeffs[i];
                if (i == 0) lhs += fb;
                keep = rhs[i] == lhs % p;
            }
        } else {
            DensePolynomial g = DensePolynomial::from_reduced(field, coeffs);
            keep = commutes(f, g);
        }
        if (keep) out.push_back(DensePolynomial::from_reduced(field, coeffs));
    } while (advance(coeffs, p));
    return out;
}

SetComparison compare_sets(const std::vector<DensePolynomial>& constructed,
                           const std::vector<DensePolynomial>& oracle) {
    SetComparison report;
    report.constructed_size = constructed.size();
    report.oracle_size = oracle.size();

    std::vector<DensePolynomial> lhs = constructed;
    std::vector<DensePolynomial> rhs = oracle;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());

    std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                        std::back_inserter(report.missing));
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(report.extra));
    return report;
}

}  // namespace commutant
