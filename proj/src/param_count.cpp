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

#include "pfaffsum/param_count.hpp"

#include <stdexcept>

#include "pfaffsum/monomial.hpp"

namespace pfaffsum {

namespace {

std::uint64_t dim_rd(int n, int d) {
    return binomial(static_cast<std::uint64_t>(n - 1 + d), d);
}

ParamCount finish(ParamCount pc) {
    pc.expected_dim_v = pc.dim_v_source > pc.group_correction
                            ? pc.dim_v_source - pc.group_correction
                            : 0;
    pc.ambient_n = pc.dim_rd - 1;
    pc.dominant_expected = pc.expected_dim_v >= pc.dim_rd;
    pc.expected_s = (pc.dim_rd + pc.expected_dim_v) / (pc.expected_dim_v + 1);
    return pc;
}

}  // namespace

ParamCount param_count_constant(int k, int b, int n) {
    if (k < 1 || b < 0 || n < 2)
        throw std::invalid_argument("param count: need k >= 1, b >= 0, n >= 2");
    ParamCount pc;
    pc.n = n;
    pc.size = 2 * k;
    pc.d = k * b;
    pc.dim_v_source = binomial(2ull * k, 2) * dim_rd(n, b);
    pc.group_correction = 4ull * k * k;
    pc.corrected = true;
    pc.dim_rd = dim_rd(n, pc.d);
    return finish(pc);
}

ParamCount param_count_matrix(const DegreeMatrix& a, int n) {
    if (a.size() % 2 != 0)
        throw std::invalid_argument("param count: even-size degree matrix required");
    ParamCount pc;
    pc.n = n;
    pc.size = a.size();
    pc.d = a.pfaffian_degree();
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            pc.dim_v_source += dim_rd(n, a.at(i, j));
    pc.group_correction = 0;
    pc.corrected = false;
    pc.dim_rd = dim_rd(n, pc.d);
    return finish(pc);
}

}  // namespace pfaffsum
