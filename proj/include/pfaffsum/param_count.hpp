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

#ifndef PFAFFSUM_PARAM_COUNT_HPP
#define PFAFFSUM_PARAM_COUNT_HPP

#include <cstdint>

#include "pfaffsum/degree_matrix.hpp"

namespace pfaffsum {

/// Dimension bookkeeping for the variety of pfaffians with a given degree
/// matrix. All quantities are affine-cone dimensions in exact integer
/// arithmetic. The (2k)^2 fiber correction is applied only for constant-entry
/// matrices; for general A the source dimension is reported uncorrected with
/// the corrected flag cleared.
struct ParamCount {
    int n = 0;
    int size = 0;              // 2k
    int d = 0;                 // degree of the pfaffian
    std::uint64_t dim_v_source = 0;    // sum over i<j of dim R_{a_ij}
    std::uint64_t group_correction = 0;
    std::uint64_t expected_dim_v = 0;  // source - correction, floored at 0
    std::uint64_t dim_rd = 0;          // dim R_d = N + 1
    std::uint64_t ambient_n = 0;       // projective N
    bool corrected = false;
    bool dominant_expected = false;    // expected_dim_v >= dim R_d
    std::uint64_t expected_s = 0;      // ceil(dim R_d / (expected_dim_v + 1))
};

/// Constant-entry matrix: size 2k, every entry of degree b, n variables.
ParamCount param_count_constant(int k, int b, int n);

/// General degree matrix (uncorrected source dimension).
ParamCount param_count_matrix(const DegreeMatrix& a, int n);

}  // namespace pfaffsum

#endif
