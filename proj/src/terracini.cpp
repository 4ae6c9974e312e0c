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

#include "pfaffsum/terracini.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace pfaffsum {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Columns contributed by a single generator g of degree e at target degree
/// d: the coefficient vectors of g * m over all monomials m of degree d - e.
void append_generator_columns(const HomogeneousPoly& g, int d,
                              const PrimeField& field,
                              std::vector<std::vector<FieldElement>>& out) {
    if (g.d > d)
        throw std::invalid_argument("assemble: generator degree exceeds target degree");
    const int n = g.n;
    const MonomialBasis target(n, d);
    const auto& ge = exponent_table(n, g.d);
    const auto& me = exponent_table(n, d - g.d);
    std::vector<int> sum(n);
    for (const auto& mono : me) {
        std::vector<FieldElement> col(target.size, 0);
        for (std::size_t i = 0; i < ge.size(); ++i) {
            if (g.coeffs[i] == 0) continue;
            for (int v = 0; v < n; ++v) sum[v] = ge[i][v] + mono[v];
            col[monomial_index(sum, d)] = g.coeffs[i];
        }
        out.push_back(std::move(col));
    }
}

RankWitness make_witness(const PrimeField& field, int n, int d,
                         std::uint64_t dim_rd, std::uint64_t rank,
                         std::uint64_t columns, Clock::time_point t0) {
    RankWitness w;
    w.prime = field.modulus();
    w.n = n;
    w.degree = d;
    w.dim_rd = dim_rd;
    w.rank = rank;
    w.columns = columns;
    w.elapsed_ms = ms_since(t0);
    w.full = (rank == dim_rd);
    return w;
}

}  // namespace

std::vector<std::vector<FieldElement>> degree_piece_columns(
    const GeneratorSet& g, int d, const PrimeField& field) {
    std::vector<std::vector<FieldElement>> cols;
    for (const auto& member : g.members)
        append_generator_columns(member, d, field, cols);
    return cols;
}

DenseMatrixFp assemble_degree_piece(const GeneratorSet& g, int d,
                                    const PrimeField& field) {
    const auto cols = degree_piece_columns(g, d, field);
    const MonomialBasis target(g.n, d);
    DenseMatrixFp m(target.size, cols.size());
    const std::int64_t nc = static_cast<std::int64_t>(cols.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < nc; ++j)
        for (std::uint64_t i = 0; i < target.size; ++i)
            m.at(i, j) = cols[j][i];
    return m;
}

RankWitness ideal_full_in_degree(const GeneratorSet& g, int d,
                                 const PrimeField& field) {
    const auto t0 = Clock::now();
    const MonomialBasis target(g.n, d);
    RankAccumulator acc(target.size, field);
    auto cols = degree_piece_columns(g, d, field);
    const std::uint64_t ncols = cols.size();
    acc.add_block(std::move(cols));
    return make_witness(field, g.n, d, target.size, acc.rank(), ncols, t0);
}

EstimateResult estimate_s(const DegreeMatrix& a, int n, std::uint64_t seed,
                          const PrimeField& field, int s_max,
                          bool include_big_pfaffian) {
    if (a.size() % 2 != 0)
        throw std::invalid_argument("estimate_s: degree matrix must have even size");
    if (s_max < 1)
        throw std::invalid_argument("estimate_s: s_max must be >= 1");
    const int d = a.pfaffian_degree();
    const MonomialBasis target(n, d);
    const SeededRng root(seed);

    EstimateResult result;
    RankAccumulator acc(target.size, field);
    std::uint64_t columns = 0;
    for (int s = 1; s <= s_max; ++s) {
        const auto t0 = Clock::now();
        SeededRng rng = root.fork(s - 1);
        const SkewPolyMatrix m = random_skew(a, n, rng, field);
        GeneratorSet g{n, {}};
        for (auto& sub : submaximal_pfaffians(m, field))
            g.members.push_back(std::move(sub.poly));
        if (include_big_pfaffian) g.members.push_back(pfaffian(m, field));
        auto cols = degree_piece_columns(g, d, field);
        columns += cols.size();
        acc.add_block(std::move(cols));

        RankWitness w = make_witness(field, n, d, target.size, acc.rank(),
                                     columns, t0);
        w.seed = seed;
        w.diag = a.diagonal();
        w.s = s;
        result.witnesses.push_back(w);
        if (w.full) {
            result.s_found = s;
            break;
        }
    }
    return result;
}

RankWitness lefschetz_surjective(const GeneratorSet& g, int d, SeededRng& rng,
                                 const PrimeField& field) {
    if (d < 1)
        throw std::invalid_argument("lefschetz: target degree must be >= 1");
    const auto t0 = Clock::now();
    const HomogeneousPoly linear = random_form(g.n, 1, rng, field);
    const MonomialBasis target(g.n, d);
    RankAccumulator acc(target.size, field);

    std::vector<std::vector<FieldElement>> cols;
    GeneratorSet l_only{g.n, {linear}};
    cols = degree_piece_columns(l_only, d, field);
    for (const auto& member : g.members)
        append_generator_columns(member, d, field, cols);
    const std::uint64_t ncols = cols.size();
    acc.add_block(std::move(cols));

    RankWitness w = make_witness(field, g.n, d, target.size, acc.rank(), ncols, t0);
    w.s = static_cast<int>(g.members.size());
    return w;
}

RankWitness generic_forms_full(const std::vector<int>& degrees, int d, int n,
                               SeededRng& rng, const PrimeField& field) {
    GeneratorSet g{n, {}};
    for (int e : degrees) {
        if (e > d)
            throw std::invalid_argument("generic forms: degree exceeds target");
        g.members.push_back(random_form(n, e, rng, field));
    }
    return ideal_full_in_degree(g, d, field);
}

namespace {

std::vector<RankWitness> replay_ternary(const DegreeMatrix& a,
                                        std::uint64_t seed,
                                        const PrimeField& field) {
    constexpr int n = 3;
    if (a.size() % 2 != 0)
        throw std::invalid_argument("replay ternary: even size required");

    // reduction chain: repeatedly take 2 off the largest diagonal entry
    // (multiplying that row and column by a linear form on the way back up)
    std::vector<int> diag = a.diagonal();
    std::vector<int> steps;  // index whose row/column gets the linear factor
    std::vector<std::vector<int>> chain{diag};
    while (*std::max_element(diag.begin(), diag.end()) >= 2) {
        const int imax = static_cast<int>(
            std::max_element(diag.begin(), diag.end()) - diag.begin());
        diag[imax] -= 2;
        steps.push_back(imax);
        chain.push_back(diag);
    }

    SeededRng rng = SeededRng(seed).fork(0);
    SkewPolyMatrix m = random_skew(DegreeMatrix::from_diagonal(diag), n, rng, field);

    std::vector<RankWitness> witnesses;
    auto certify = [&](const SkewPolyMatrix& mat, int s_label) {
        GeneratorSet g{n, {}};
        for (auto& sub : submaximal_pfaffians(mat, field))
            g.members.push_back(std::move(sub.poly));
        RankWitness w =
            ideal_full_in_degree(g, mat.degree_matrix().pfaffian_degree(), field);
        w.seed = seed;
        w.diag = mat.degree_matrix().diagonal();
        w.s = s_label;
        witnesses.push_back(w);
    };
    certify(m, 1);

    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const int imax = *it;
        const HomogeneousPoly linear = random_form(n, 1, rng, field);
        std::vector<int> next_diag = m.degree_matrix().diagonal();
        next_diag[imax] += 2;
        SkewPolyMatrix lifted(DegreeMatrix::from_diagonal(next_diag), n);
        const int msize = m.size();
        for (int i = 0; i < msize; ++i)
            for (int j = i + 1; j < msize; ++j) {
                const HomogeneousPoly& e = m.upper(i, j);
                lifted.set_upper(i, j, (i == imax || j == imax)
                                           ? poly_mul(linear, e, field)
                                           : e);
            }
        m = std::move(lifted);
        certify(m, 1);
    }
    return witnesses;
}

std::vector<RankWitness> replay_linmain(int k, std::uint64_t seed,
                                        const PrimeField& field) {
    constexpr int n = 4;
    if (k < 2)
        throw std::invalid_argument("replay linmain: k >= 2 required");
    if (2 * k > kMaxSkewSize)
        throw std::invalid_argument("replay linmain: matrix size exceeds the cap of 16");

    std::vector<RankWitness> witnesses;
    const SeededRng root(seed);

    for (int step = 2; step <= k; ++step) {
        SeededRng rng = root.fork(step);
        const DegreeMatrix big =
            DegreeMatrix::from_diagonal(std::vector<int>(2 * step, 1));
        GeneratorSet pooled{n, {}};

        if (step > 2) {
            const DegreeMatrix small =
                DegreeMatrix::from_diagonal(std::vector<int>(2 * step - 2, 1));
            const HomogeneousPoly linear = random_form(n, 1, rng, field);
            for (int i = 0; i + 1 < step; ++i) {
                SkewPolyMatrix g = random_skew(small, n, rng, field);
                // border with first two rows/columns (0 L 0...0), (-L 0 0...0)
                SkewPolyMatrix h(big, n);
                h.set_upper(0, 1, linear);
                for (int r = 0; r < small.size(); ++r)
                    for (int c = r + 1; c < small.size(); ++c)
                        h.set_upper(r + 2, c + 2, g.upper(r, c));
                for (auto& sub : submaximal_pfaffians(h, field))
                    pooled.members.push_back(std::move(sub.poly));
            }
        }
        SkewPolyMatrix fresh = random_skew(big, n, rng, field);
        for (auto& sub : submaximal_pfaffians(fresh, field))
            pooled.members.push_back(std::move(sub.poly));

        RankWitness w = ideal_full_in_degree(pooled, step, field);
        w.seed = seed;
        w.diag = big.diagonal();
        w.s = step;
        witnesses.push_back(w);
    }
    return witnesses;
}

}  // namespace

std::vector<RankWitness> replay_proof_construction(ReplayMode mode,
                                                   const DegreeMatrix& a, int k,
                                                   std::uint64_t seed,
                                                   const PrimeField& field) {
    return mode == ReplayMode::ternary ? replay_ternary(a, seed, field)
                                       : replay_linmain(k, seed, field);
}

}  // namespace pfaffsum
