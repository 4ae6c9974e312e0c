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

#ifndef PFAFFSUM_MATRIX_FP_HPP
#define PFAFFSUM_MATRIX_FP_HPP

#include <cstdint>
#include <vector>

#include "pfaffsum/field.hpp"

namespace pfaffsum {

/// Dense matrix over F_p, row-major.
struct DenseMatrixFp {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<FieldElement> entries;

    DenseMatrixFp() = default;
    DenseMatrixFp(std::uint64_t r, std::uint64_t c)
        : rows(r), cols(c), entries(r * c, 0) {}

    FieldElement& at(std::uint64_t i, std::uint64_t j) {
        return entries[i * cols + j];
    }
    FieldElement at(std::uint64_t i, std::uint64_t j) const {
        return entries[i * cols + j];
    }
};

/// Incremental span of column vectors over F_p. Columns are consumed in the
/// caller-supplied order; each pivot is the first nonzero coordinate of the
/// reduced vector, so the result is deterministic and independent of the
/// OpenMP schedule (only the inner exact-arithmetic updates run in parallel).
class RankAccumulator {
public:
    RankAccumulator(std::uint64_t dim, const PrimeField& field)
        : dim_(dim), field_(&field) {}

    /// Adds one vector to the span; returns true when the rank grew.
    bool add(std::vector<FieldElement> v);

    /// Adds a block of columns. The columns are first reduced against the
    /// current basis in parallel, then inserted sequentially in order.
    void add_block(std::vector<std::vector<FieldElement>> columns);

    std::uint64_t rank() const { return basis_.size(); }
    std::uint64_t dim() const { return dim_; }

private:
    void reduce_against_basis(std::vector<FieldElement>& v) const;

    std::uint64_t dim_;
    const PrimeField* field_;
    std::vector<std::vector<FieldElement>> basis_;  // pivot-normalized rows
    std::vector<std::uint64_t> pivots_;             // pivot index of basis_[k]
};

/// Rank via elimination on an internal copy; the input is never mutated.
std::uint64_t rank(const DenseMatrixFp& m, const PrimeField& field);

/// Determinant mod p of a square matrix (elimination with sign tracking).
FieldElement det_mod_p(const DenseMatrixFp& m, const PrimeField& field);

namespace reference {

/// Serial row-reduction rank, kept as an independent check for the
/// accumulator-based kernel above.
std::uint64_t rank_serial(const DenseMatrixFp& m, const PrimeField& field);

}  // namespace reference

}  // namespace pfaffsum

#endif
