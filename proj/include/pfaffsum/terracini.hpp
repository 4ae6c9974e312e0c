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

#ifndef PFAFFSUM_TERRACINI_HPP
#define PFAFFSUM_TERRACINI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pfaffsum/degree_matrix.hpp"
#include "pfaffsum/matrix_fp.hpp"
#include "pfaffsum/skew_matrix.hpp"

namespace pfaffsum {

/// Generators of a graded ideal, used through their degree-d piece. Zero
/// polynomials are permitted and contribute nothing.
struct GeneratorSet {
    int n = 0;
    std::vector<HomogeneousPoly> members;
};

/// Reproducible certificate of a fullness test. verdict full iff
/// rank == dim_rd. A deficient verdict is never a disproof: it reads as
/// "not certified at this seed/prime".
struct RankWitness {
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::vector<int> diag;  // degree-matrix diagonal, empty when not applicable
    int n = 0;
    int s = 0;
    int degree = 0;
    std::uint64_t dim_rd = 0;
    std::uint64_t rank = 0;
    std::uint64_t columns = 0;
    double elapsed_ms = 0.0;
    bool full = false;
};

/// The degree-d piece of the ideal generated by G, as a column matrix: one
/// column per (member, monomial of degree d - deg member) pair, rows indexed
/// by the degree-d monomial basis. Column order is members in sequence order,
/// monomials in index order.
DenseMatrixFp assemble_degree_piece(const GeneratorSet& g, int d,
                                    const PrimeField& field);

/// Column vectors of the degree-d piece in the same deterministic order
/// (used by the incremental rank paths).
std::vector<std::vector<FieldElement>> degree_piece_columns(
    const GeneratorSet& g, int d, const PrimeField& field);

RankWitness ideal_full_in_degree(const GeneratorSet& g, int d,
                                 const PrimeField& field);

struct EstimateResult {
    int s_found = 0;  // 0 when no s <= s_max certifies fullness
    std::vector<RankWitness> witnesses;
};

/// Samples s = 1, 2, ... independent random skew matrices with degree matrix
/// A (matrix i drawn from the child stream fork(seed, i-1)), pools all their
/// submaximal pfaffians and tests fullness in degree tr(A)/2. Elimination
/// state is reused across the sweep, so ranks are non-decreasing in s.
/// include_big_pfaffian additionally appends each matrix's own pfaffian as a
/// generator (debug mode; it is redundant by first-row expansion).
EstimateResult estimate_s(const DegreeMatrix& a, int n, std::uint64_t seed,
                          const PrimeField& field, int s_max,
                          bool include_big_pfaffian = false);

/// Tests L*R_{d-1} + I_d = R_d for a random linear form L drawn from rng.
RankWitness lefschetz_surjective(const GeneratorSet& g, int d, SeededRng& rng,
                                 const PrimeField& field);

/// Samples independent random forms of the given degrees and tests fullness
/// of the generated ideal in degree d.
RankWitness generic_forms_full(const std::vector<int>& degrees, int d, int n,
                               SeededRng& rng, const PrimeField& field);

enum class ReplayMode { ternary, linmain };

/// Replays the inductive proof constructions: for ternary, the chain of
/// first-row/column multiplications by a linear form down from a constant
/// base matrix; for linmain, the bordered matrices with an (0 L 0 ... 0) /
/// (-L 0 0 ... 0) frame plus one fresh general matrix per step. Each step's
/// structured (non-generic) matrices must still achieve full rank.
std::vector<RankWitness> replay_proof_construction(ReplayMode mode,
                                                   const DegreeMatrix& a, int k,
                                                   std::uint64_t seed,
                                                   const PrimeField& field);

}  // namespace pfaffsum

#endif
