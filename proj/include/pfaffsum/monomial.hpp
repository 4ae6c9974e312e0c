/*
 * Copyright 2026 The pfaffsum authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PFAFFSUM_MONOMIAL_HPP
#define PFAFFSUM_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace pfaffsum {

/// binom(a, b) in exact 64-bit arithmetic (desk-scale arguments).
std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

/// Canonical basis of monomials of degree d in n variables.
///
/// The ordering is graded colexicographic through the combinatorial number
/// system: an exponent vector (e_1, ..., e_n) with sum d maps to the strictly
/// increasing sequence c_j = e_1 + ... + e_j + j - 1 (j = 1..n-1), and its
/// index is sum_j binom(c_j, j). Rank and unrank are closed-form, no tables.
struct MonomialBasis {
    int n;
    int d;
    std::uint64_t size;

    MonomialBasis(int n_, int d_);
};

std::uint64_t monomial_index(const std::vector<int>& exponents, int d);
std::vector<int> monomial_unrank(std::uint64_t index, int n, int d);

/// All exponent vectors of degree d in n variables, listed in index order.
std::vector<std::vector<int>> enumerate_exponents(int n, int d);

/// Process-wide cache of enumerate_exponents results. Thread-safe; the
/// returned reference stays valid for the process lifetime.
const std::vector<std::vector<int>>& exponent_table(int n, int d);

}  // namespace pfaffsum

#endif
