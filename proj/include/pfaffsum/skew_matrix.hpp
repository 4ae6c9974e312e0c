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

#ifndef PFAFFSUM_SKEW_MATRIX_HPP
#define PFAFFSUM_SKEW_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pfaffsum/degree_matrix.hpp"
#include "pfaffsum/matrix_fp.hpp"
#include "pfaffsum/poly.hpp"

namespace pfaffsum {

/// Memoization over the 2^m subset lattice caps practical sizes; the CLI
/// refuses anything beyond this.
constexpr int kMaxSkewSize = 16;

/// Skew-symmetric matrix of homogeneous forms conforming to a degree matrix.
/// Only the strict upper triangle is stored; entry (j,i) is the negation of
/// (i,j) and the diagonal is zero. Zero entries carry the nominal degree a_ij.
class SkewPolyMatrix {
public:
    SkewPolyMatrix(DegreeMatrix a, int n);

    int size() const { return a_.size(); }
    int vars() const { return n_; }
    const DegreeMatrix& degree_matrix() const { return a_; }

    /// Upper-triangle access, i < j required.
    const HomogeneousPoly& upper(int i, int j) const;
    void set_upper(int i, int j, HomogeneousPoly f);

    /// Scalar skew matrix M(P), full m x m grid.
    DenseMatrixFp evaluate_at(const std::vector<FieldElement>& point,
                              const PrimeField& field) const;

private:
    DegreeMatrix a_;
    int n_;
    std::vector<HomogeneousPoly> entries_;  // (i,j), i<j, row-major
};

/// Each upper entry is an independent random form of degree a_ij, sampled in
/// row-major order (one stream draw per coefficient).
SkewPolyMatrix random_skew(const DegreeMatrix& a, int n, SeededRng& rng,
                           const PrimeField& field);

/// Pfaffian by first-row expansion over surviving index subsets, memoized by
/// bitmask. Base cases: Pf of the empty matrix is 1, Pf((0,f),(-f,0)) = f.
class PfaffianEngine {
public:
    PfaffianEngine(const SkewPolyMatrix& m, const PrimeField& field);

    /// Pfaffian of the submatrix on the surviving-index mask (even popcount).
    const HomogeneousPoly& pfaffian(std::uint32_t mask);

    /// Pfaffian of the full matrix.
    const HomogeneousPoly& pfaffian();

private:
    const SkewPolyMatrix* m_;
    const PrimeField* field_;
    std::unordered_map<std::uint32_t, HomogeneousPoly> memo_;
};

HomogeneousPoly pfaffian(const SkewPolyMatrix& m, const PrimeField& field);

struct SubmaximalPfaffian {
    int i;
    int j;  // -1 for odd-size erasure of a single index
    HomogeneousPoly poly;
};

/// Even size: the binom(m,2) pfaffians obtained by erasing rows/columns
/// {i,j}; odd size: the m pfaffians obtained by erasing a single index.
std::vector<SubmaximalPfaffian> submaximal_pfaffians(const SkewPolyMatrix& m,
                                                     const PrimeField& field);

/// Numeric pfaffian of a scalar skew-symmetric matrix, same recursion.
FieldElement pfaffian_scalar(const DenseMatrixFp& s, const PrimeField& field);

struct IdentityCheckResult {
    bool ok;
    std::vector<FieldElement> counterexample;  // empty when ok
};

/// At random points P checks Pf(M)(P) = Pf(M(P)), Pf(M(P))^2 = det(M(P)),
/// and the first-row expansion identity at P.
IdentityCheckResult pfaffian_identity_check(const SkewPolyMatrix& m, int trials,
                                            SeededRng& rng,
                                            const PrimeField& field);

}  // namespace pfaffsum

#endif
