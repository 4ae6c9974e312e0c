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

// Compares the OpenMP rank/assembly kernels against the serial reference on
// synthetic workloads larger than the acceptance suites use.

#include <chrono>
#include <functional>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pfaffsum/terracini.hpp"

using namespace pfaffsum;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    const PrimeField field;
    SeededRng rng(1);

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP: not enabled\n";
#endif

    // dense rank on a random low-rank-deficient matrix
    {
        const std::uint64_t rows = 600, cols = 1000;
        DenseMatrixFp m(rows, cols);
        for (auto& x : m.entries) x = rng.uniform(field);
        for (std::uint64_t i = 0; i < rows; ++i)  // plant a dependency
            m.at(i, cols - 1) = m.at(i, 0);

        std::uint64_t r_par = 0, r_ser = 0;
        const double t_par = time_ms([&] { r_par = rank(m, field); });
        const double t_ser =
            time_ms([&] { r_ser = reference::rank_serial(m, field); });
        std::cout << "rank " << rows << "x" << cols << ": accumulator " << t_par
                  << " ms, serial reference " << t_ser << " ms (ranks " << r_par
                  << "/" << r_ser << (r_par == r_ser ? ", agree" : ", MISMATCH")
                  << ")\n";
    }

    // degree-piece assembly + rank for a pooled pfaffian ideal
    {
        const DegreeMatrix a =
            DegreeMatrix::from_diagonal(std::vector<int>(10, 1));
        GeneratorSet pooled{4, {}};
        for (int i = 0; i < 4; ++i) {
            SeededRng child = rng.fork(i);
            const SkewPolyMatrix g = random_skew(a, 4, child, field);
            for (auto& sub : submaximal_pfaffians(g, field))
                pooled.members.push_back(std::move(sub.poly));
        }
        RankWitness w;
        const double t =
            time_ms([&] { w = ideal_full_in_degree(pooled, 6, field); });
        std::cout << "pooled 10x10 linear ideal, degree 6: " << w.columns
                  << " columns, rank " << w.rank << "/" << w.dim_rd << " in "
                  << t << " ms\n";
    }
    return 0;
}
