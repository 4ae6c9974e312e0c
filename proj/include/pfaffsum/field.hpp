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

#ifndef PFAFFSUM_FIELD_HPP
#define PFAFFSUM_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace pfaffsum {

/// Canonical residue in [0, p). Plain integer; the modulus lives in PrimeField.
using FieldElement = std::uint64_t;

constexpr std::uint64_t kDefaultPrime = 2147483647ull;   // 2^31 - 1
constexpr std::uint64_t kSecondPrime = 1073741789ull;    // used for two-prime agreement

bool is_prime_u64(std::uint64_t n);

/// Arithmetic context for F_p. The modulus must be prime and > 2^20 so that
/// random samples behave generically with overwhelming probability.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
        if (p <= (1ull << 20))
            throw std::invalid_argument("prime field: modulus must exceed 2^20");
        if (!is_prime_u64(p))
            throw std::invalid_argument("prime field: modulus is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    FieldElement reduce(std::uint64_t v) const { return v % p_; }

    FieldElement add(FieldElement a, FieldElement b) const {
        FieldElement s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    FieldElement sub(FieldElement a, FieldElement b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    FieldElement neg(FieldElement a) const { return a == 0 ? 0 : p_ - a; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b) % p_);
    }

    FieldElement pow(FieldElement a, std::uint64_t e) const {
        FieldElement r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FieldElement inv(FieldElement a) const {
        if (a == 0)
            throw std::domain_error("prime field: inverse of zero");
        return pow(a, p_ - 2);
    }

private:
    std::uint64_t p_;
};

}  // namespace pfaffsum

#endif
