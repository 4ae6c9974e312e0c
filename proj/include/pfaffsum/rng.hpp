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

#ifndef PFAFFSUM_RNG_HPP
#define PFAFFSUM_RNG_HPP

#include <cstdint>

#include "pfaffsum/field.hpp"

namespace pfaffsum {

/// Portable splitmix64 generator. The recurrence is fixed so that a seed
/// yields the identical sampling sequence on every platform:
///
///   state += 0x9e3779b97f4a7c15
///   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   output = z ^ (z >> 31)
///
/// Child streams (for parallel or per-matrix sampling) are derived as
/// fork(i) = SeededRng(mix(seed + (i+1) * 0x9e3779b97f4a7c15)) where mix is
/// the output function above. A SeededRng is single-consumer.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform residue in [0, p). One state advance per draw; the modulo
    /// bias is below 2^-32 for word-size primes.
    FieldElement uniform(const PrimeField& f) { return next() % f.modulus(); }

    /// Deterministic child stream, independent of how much of this stream
    /// has been consumed.
    SeededRng fork(std::uint64_t index) const {
        return SeededRng(mix(state_ + (index + 1) * 0x9e3779b97f4a7c15ull));
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace pfaffsum

#endif
