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

#include "pfaffsum/json_io.hpp"
#include "pfaffsum/terracini.hpp"

using namespace pfaffsum;

namespace {

const PrimeField F;
const PrimeField F2(kSecondPrime);

HomogeneousPoly variable(int n, int v) {
    HomogeneousPoly x(n, 1);
    std::vector<int> e(n, 0);
    e[v] = 1;
    x.coeffs[monomial_index(e, 1)] = 1;
    return x;
}

// brute-force oracle: dimension of the degree-d span of all products
// generator * monomial, computed by explicit polynomial multiplication and
// serial elimination (independent of the assembly path)
std::uint64_t oracle_span_dim(const GeneratorSet& g, int d) {
    std::vector<HomogeneousPoly> products;
    for (const auto& member : g.members) {
        const auto& monos = exponent_table(g.n, d - member.d);
        for (const auto& mono : monos) {
            HomogeneousPoly m(g.n, d - member.d);
            m.coeffs[monomial_index(mono, d - member.d)] = 1;
            products.push_back(poly_mul(member, m, F));
        }
    }
    const MonomialBasis target(g.n, d);
    DenseMatrixFp mat(products.size(), target.size);
    for (std::size_t i = 0; i < products.size(); ++i)
        for (std::uint64_t j = 0; j < target.size; ++j)
            mat.at(i, j) = products[i].coeffs[j];
    return reference::rank_serial(mat, F);
}

}  // namespace

TEST_CASE("assembly shapes and hand cases") {
    SeededRng rng(1);
    // one generator of degree d: exactly one column, its coefficient vector
    const HomogeneousPoly f = random_form(4, 3, rng, F);
    GeneratorSet g{4, {f}};
    const DenseMatrixFp m = assemble_degree_piece(g, 3, F);
    CHECK(m.cols == 1);
    CHECK(m.rows == 20);
    for (std::uint64_t i = 0; i < m.rows; ++i) CHECK(m.at(i, 0) == f.coeffs[i]);

    // the 4 variables at d=2: 16 columns in a 10-row matrix
    GeneratorSet vars{4, {}};
    for (int v = 0; v < 4; ++v) vars.members.push_back(variable(4, v));
    const DenseMatrixFp mv = assemble_degree_piece(vars, 2, F);
    CHECK(mv.rows == 10);
    CHECK(mv.cols == 16);

    // empty generator set: 0 columns
    CHECK(assemble_degree_piece(GeneratorSet{4, {}}, 2, F).cols == 0);

    CHECK_THROWS_AS(assemble_degree_piece(GeneratorSet{4, {random_form(4, 3, rng, F)}}, 2, F),
                    std::invalid_argument);
}

TEST_CASE("fullness matches the brute-force oracle") {
    SeededRng rng(2);
    // 4 independent linear forms generate everything in degree 2
    GeneratorSet vars{4, {}};
    for (int v = 0; v < 4; ++v) vars.members.push_back(variable(4, v));
    const RankWitness w = ideal_full_in_degree(vars, 2, F);
    CHECK(w.full);
    CHECK(w.rank == 10);
    CHECK(oracle_span_dim(vars, 2) == 10);

    // one random quadric in degree 2: rank 1, deficient
    GeneratorSet quad{4, {random_form(4, 2, rng, F)}};
    const RankWitness wq = ideal_full_in_degree(quad, 2, F);
    CHECK_FALSE(wq.full);
    CHECK(wq.rank == 1);

    // random mixed sets agree with the oracle
    for (int trial = 0; trial < 5; ++trial) {
        GeneratorSet g{3, {}};
        for (int i = 0; i < 2; ++i) g.members.push_back(random_form(3, 2, rng, F));
        g.members.push_back(random_form(3, 1, rng, F));
        const RankWitness witness = ideal_full_in_degree(g, 3, F);
        CHECK(witness.rank == oracle_span_dim(g, 3));
    }
}

TEST_CASE("ternary 6x6 linear matrix: submaximal pfaffians full in degree 3") {
    const DegreeMatrix a = DegreeMatrix::from_diagonal(std::vector<int>(6, 1));
    for (const PrimeField* field : {&F, &F2}) {
        SeededRng rng(3);
        const SkewPolyMatrix m = random_skew(a, 3, rng, *field);
        GeneratorSet g{3, {}};
        for (auto& sub : submaximal_pfaffians(m, *field))
            g.members.push_back(std::move(sub.poly));
        CHECK(g.members.size() == 15);
        const RankWitness w = ideal_full_in_degree(g, 3, *field);
        CHECK(w.dim_rd == 10);
        CHECK(w.full);
    }
}

TEST_CASE("estimate_s: all-ones 4x4 in four variables needs one matrix") {
    const DegreeMatrix a = DegreeMatrix::from_diagonal({1, 1, 1, 1});
    const EstimateResult r = estimate_s(a, 4, 42, F, 3);
    CHECK(r.s_found == 1);
    CHECK(r.witnesses.front().full);
    CHECK(r.witnesses.front().dim_rd == 10);
}

TEST_CASE("estimate_s sweep: monotone ranks, soundness, determinism") {
    const DegreeMatrix a = DegreeMatrix::from_diagonal({6, 4, 4, 2});
    const EstimateResult r = estimate_s(a, 4, 7, F, 2);
    CHECK(r.s_found >= 1);
    CHECK(r.s_found <= 2);
    std::uint64_t prev = 0;
    for (const auto& w : r.witnesses) {
        CHECK(w.rank >= prev);
        CHECK(w.rank <= w.dim_rd);
        prev = w.rank;
    }
    // identical inputs give identical witnesses (elapsed time aside)
    const EstimateResult r2 = estimate_s(a, 4, 7, F, 2);
    REQUIRE(r.witnesses.size() == r2.witnesses.size());
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        auto j1 = witness_to_json(r.witnesses[i]);
        auto j2 = witness_to_json(r2.witnesses[i]);
        j1.erase("elapsed_ms");
        j2.erase("elapsed_ms");
        CHECK(j1.dump() == j2.dump());
    }
}

TEST_CASE("tangent-space containment: the big pfaffian is redundant") {
    const DegreeMatrix a = DegreeMatrix::from_diagonal({2, 2, 2, 2});
    const EstimateResult without = estimate_s(a, 4, 11, F, 1, false);
    const EstimateResult with = estimate_s(a, 4, 11, F, 1, true);
    CHECK(without.witnesses.back().rank == with.witnesses.back().rank);
}

TEST_CASE("lefschetz surjectivity") {
    SeededRng rng(4);
    // empty generator set: multiplication by one linear form is never
    // surjective R_{d-1} -> R_d for n >= 2
    const RankWitness w = lefschetz_surjective(GeneratorSet{3, {}}, 2, rng, F);
    CHECK_FALSE(w.full);

    // G already spanning R_d: full regardless of L
    GeneratorSet span{3, {}};
    for (const auto& e : exponent_table(3, 2)) {
        HomogeneousPoly m(3, 2);
        m.coeffs[monomial_index(e, 2)] = 1;
        span.members.push_back(m);
    }
    CHECK(lefschetz_surjective(span, 2, rng, F).full);

    // 5x5 all-ones ternary matrix at d = 3 (threshold tr/2 - 1 rounded up)
    for (const PrimeField* field : {&F, &F2}) {
        SeededRng r2(5);
        const DegreeMatrix a = DegreeMatrix::from_diagonal(std::vector<int>(5, 1));
        const SkewPolyMatrix m = random_skew(a, 3, r2, *field);
        GeneratorSet g{3, {}};
        for (auto& sub : submaximal_pfaffians(m, *field))
            g.members.push_back(std::move(sub.poly));
        CHECK(lefschetz_surjective(g, 2, r2, *field).full);
    }
}

TEST_CASE("generic forms generation") {
    SeededRng rng(6);
    CHECK(generic_forms_full(std::vector<int>(8, 1), 2, 4, rng, F).full);
    CHECK_FALSE(generic_forms_full({4}, 4, 4, rng, F).full);
}

TEST_CASE("proof replays") {
    const DegreeMatrix dummy = DegreeMatrix::from_diagonal({1, 1});

    // linmain: base case plus two inductive steps
    const auto lin = replay_proof_construction(ReplayMode::linmain, dummy, 4, 9, F);
    REQUIRE(lin.size() == 3);
    for (const auto& w : lin) CHECK(w.full);

    // ternary: all-ones 4x4 target, witness chain down to the base
    const DegreeMatrix a = DegreeMatrix::from_diagonal({2, 2, 2, 2});
    const auto ter = replay_proof_construction(ReplayMode::ternary, a, 0, 9, F);
    REQUIRE(!ter.empty());
    for (const auto& w : ter) CHECK(w.full);
    CHECK(ter.back().diag == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("witness JSON round-trips the frozen field set") {
    const DegreeMatrix a = DegreeMatrix::from_diagonal({1, 1, 1, 1});
    const EstimateResult r = estimate_s(a, 4, 1, F, 1);
    const auto j = witness_to_json(r.witnesses.front());
    for (const char* key : {"version", "prime", "seed", "diag", "n", "s",
                            "degree", "dim_rd", "rank", "columns", "verdict",
                            "elapsed_ms"})
        CHECK(j.contains(key));
    CHECK(j["verdict"] == "full");
}

TEST_CASE("degree matrix JSON accepts diag and matrix forms") {
    const auto a = degree_matrix_from_json(nlohmann::json::parse(
        R"({"diag": [4, 2, 2, 2]})"));
    const auto b = degree_matrix_from_json(nlohmann::json::parse(
        R"({"matrix": [[4,3,3,3],[3,2,2,2],[3,2,2,2],[3,2,2,2]]})"));
    CHECK(a == b);
    CHECK_THROWS_AS(degree_matrix_from_json(nlohmann::json::parse("{}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(degree_matrix_from_json(nlohmann::json::parse(
                        R"({"diag": [2, 1]})")),
                    std::invalid_argument);
}
