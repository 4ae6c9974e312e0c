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

#include <doctest.h>

#include "pfaffsum/param_count.hpp"

using namespace pfaffsum;

TEST_CASE("four variables, linear entries, the degree-16 threshold") {
    // 2k = 32, d = 16: 496*4 = 1984 source, correction 1024, 960 < 969
    const ParamCount p32 = param_count_constant(16, 1, 4);
    CHECK(p32.dim_v_source == 1984);
    CHECK(p32.group_correction == 1024);
    CHECK(p32.expected_dim_v == 960);
    CHECK(p32.dim_rd == 969);
    CHECK_FALSE(p32.dominant_expected);

    // 2k = 30, d = 15: 435*4 - 900 = 840 >= 816
    const ParamCount p30 = param_count_constant(15, 1, 4);
    CHECK(p30.expected_dim_v == 840);
    CHECK(p30.dim_rd == 816);
    CHECK(p30.dominant_expected);

    // 24k(k-1) >= (k+1)(k+2)(k+3) holds exactly for 3 <= k <= 15
    CHECK_FALSE(param_count_constant(2, 1, 4).dominant_expected);
    for (int k = 3; k <= 15; ++k)
        CHECK(param_count_constant(k, 1, 4).dominant_expected);
    for (int k = 16; k <= 24; ++k)
        CHECK_FALSE(param_count_constant(k, 1, 4).dominant_expected);
}

TEST_CASE("three variables, linear entries") {
    // expected dim is 2k^2 - 3k against dim R_k = (k+1)(k+2)/2
    for (int k = 1; k <= 3; ++k)
        CHECK_FALSE(param_count_constant(k, 1, 3).dominant_expected);
    for (int k = 4; k <= 20; ++k)
        CHECK(param_count_constant(k, 1, 3).dominant_expected);
}

TEST_CASE("general matrix path is uncorrected") {
    const DegreeMatrix a = DegreeMatrix::from_diagonal({4, 2, 2, 2});
    const ParamCount pc = param_count_matrix(a, 4);
    CHECK_FALSE(pc.corrected);
    CHECK(pc.group_correction == 0);
    // source = 3*dim R_3 + 3*dim R_2 = 3*20 + 3*10
    CHECK(pc.dim_v_source == 90);
    CHECK(pc.d == 5);
    CHECK(pc.ambient_n == pc.dim_rd - 1);
}

TEST_CASE("expected-s heuristic is a ceiling") {
    const ParamCount p32 = param_count_constant(16, 1, 4);
    // ceil(969 / 961) = 2
    CHECK(p32.expected_s == 2);
    const ParamCount p30 = param_count_constant(15, 1, 4);
    CHECK(p30.expected_s == 1);
}
