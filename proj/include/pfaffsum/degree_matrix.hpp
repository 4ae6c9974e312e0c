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

#ifndef PFAFFSUM_DEGREE_MATRIX_HPP
#define PFAFFSUM_DEGREE_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

namespace pfaffsum {

/// Symmetric homogeneous non-negative integer matrix A prescribing the entry
/// degrees of a skew-symmetric matrix of forms. Stored as the full m x m grid
/// even though the diagonal determines it; erasure and display stay trivial
/// and validation tests the redundancy.
class DegreeMatrix {
public:
    /// Builds from a full grid. Throws std::invalid_argument when any
    /// invariant (symmetry, homogeneity, non-negativity, parity) fails.
    explicit DegreeMatrix(std::vector<std::vector<int>> entries);

    /// a_ij = (diag_i + diag_j) / 2; all diagonal entries must share parity.
    static DegreeMatrix from_diagonal(const std::vector<int>& diag);

    int size() const { return m_; }
    int at(int i, int j) const { return entries_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    std::vector<int> diagonal() const;

    int trace() const;

    /// tr(A)/2, the degree of the pfaffian of a conforming matrix.
    /// Requires even size.
    int pfaffian_degree() const;

    /// Degree of the (i,j) submaximal pfaffian, tr(A)/2 - a_ij. Even size.
    int submaximal_degree(int i, int j) const;

    /// Submatrix on the complement of the given (distinct, in-range) indices.
    DegreeMatrix erase(const std::vector<int>& indices) const;

    bool operator==(const DegreeMatrix& other) const {
        return entries_ == other.entries_;
    }

private:
    int m_;
    std::vector<std::vector<int>> entries_;
};

struct OrderResult {
    DegreeMatrix matrix;
    std::vector<int> permutation;  // new index i came from old index permutation[i]
};

/// Permutes indices so the first column is non-increasing; a_11 is then the
/// maximal entry and a_mm the minimal one. The sort is stable, so an already
/// ordered matrix returns the identity permutation.
OrderResult order(const DegreeMatrix& a);

/// Validation on a raw grid: std::nullopt means ok, otherwise the message
/// names the first violated identity with its indices.
std::optional<std::string> validate(const std::vector<std::vector<int>>& grid);

}  // namespace pfaffsum

#endif
