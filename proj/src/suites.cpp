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

#include "pfaffsum/suites.hpp"

#include <sstream>

#include "pfaffsum/terracini.hpp"

namespace pfaffsum::suites {

namespace {

std::string diag_str(const std::vector<int>& diag) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < diag.size(); ++i)
        os << (i ? "," : "") << diag[i];
    os << ")";
    return os.str();
}

/// estimate_s at both primes; passes when both certify s <= bound.
Certificate estimate_cert(const std::string& name, const std::vector<int>& diag,
                          int n, int bound, std::uint64_t seed,
                          const PrimeField& p1, const PrimeField& p2) {
    const DegreeMatrix a = DegreeMatrix::from_diagonal(diag);
    const EstimateResult r1 = estimate_s(a, n, seed, p1, bound);
    const EstimateResult r2 = estimate_s(a, n, seed, p2, bound);
    Certificate c;
    c.name = name;
    c.pass = r1.s_found >= 1 && r2.s_found >= 1;
    std::ostringstream os;
    os << "diag " << diag_str(diag) << ", n=" << n << ", bound s<=" << bound;
    if (c.pass) {
        os << ": certified s=" << r1.s_found << " over F_" << p1.modulus()
           << " and s=" << r2.s_found << " over F_" << p2.modulus()
           << " at seed " << seed;
    } else {
        os << ": not certified at this seed (rank "
           << r1.witnesses.back().rank << "/" << r1.witnesses.back().dim_rd
           << " over F_" << p1.modulus() << ")";
    }
    c.detail = os.str();
    return c;
}

}  // namespace

bool all_pass(const CertList& certs) {
    for (const auto& c : certs)
        if (!c.pass) return false;
    return true;
}

CertList thm_ternary(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2) {
    CertList out;
    const std::vector<std::vector<int>> diagonals = {
        {1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1, 1, 1},
        {4, 2, 2, 2},
        {3, 3, 1, 1},
    };
    for (const auto& diag : diagonals)
        out.push_back(estimate_cert("ternary s=1 " + diag_str(diag), diag, 3,
                                    1, seed, p1, p2));
    return out;
}

CertList thm_4x4(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2) {
    CertList out;
    const std::vector<std::vector<int>> diagonals = {
        {2, 2, 2, 2}, {4, 2, 2, 2}, {6, 4, 4, 2}, {5, 3, 3, 1}, {8, 2, 2, 2},
    };
    for (const auto& diag : diagonals)
        out.push_back(estimate_cert("4x4 s<=2 " + diag_str(diag), diag, 4, 2,
                                    seed, p1, p2));
    return out;
}

CertList thm_main(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2) {
    CertList out;
    struct Case {
        std::vector<int> diag;
        int k;
    };
    const std::vector<Case> cases = {
        {{1, 1, 1, 1, 1, 1}, 3},
        {{1, 1, 1, 1, 1, 1, 1, 1}, 4},
        {{3, 3, 3, 1, 1, 1}, 3},
    };
    for (const auto& c : cases)
        out.push_back(estimate_cert("main s<=k " + diag_str(c.diag), c.diag, 4,
                                    c.k, seed, p1, p2));
    return out;
}

CertList prop_step3(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2) {
    constexpr int n = 3;
    constexpr int k = 3;
    const DegreeMatrix a = DegreeMatrix::from_diagonal({1, 1, 1, 1, 1});
    const int d = (a.at(0, 0) + a.trace()) / 2;

    auto run = [&](const PrimeField& field) {
        GeneratorSet pooled{n, {}};
        const SeededRng root(seed);
        for (int i = 0; i < k; ++i) {
            SeededRng rng = root.fork(i);
            const SkewPolyMatrix g = random_skew(a, n, rng, field);
            for (auto& sub : submaximal_pfaffians(g, field))
                pooled.members.push_back(std::move(sub.poly));
        }
        return ideal_full_in_degree(pooled, d, field);
    };

    const RankWitness w1 = run(p1);
    const RankWitness w2 = run(p2);
    Certificate c;
    c.name = "step3 pooled odd-size pfaffians";
    c.pass = w1.full && w2.full;
    std::ostringstream os;
    os << "k=3 matrices 5x5 all-ones, n=3, degree " << d << ": rank " << w1.rank
       << "/" << w1.dim_rd << " over F_" << p1.modulus() << ", rank " << w2.rank
       << "/" << w2.dim_rd << " over F_" << p2.modulus() << " at seed " << seed;
    c.detail = os.str();
    return {c};
}

CertList lemma_wl(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2) {
    CertList out;
    struct Case {
        std::vector<int> diag;
        int n;
        int d;  // tested threshold degree
        std::string label;
    };
    std::vector<Case> cases;
    auto single_matrix_threshold = [](const DegreeMatrix& a) {
        // d >= tr(A)/2 - 1, rounded up for odd traces
        return (a.trace() + 1) / 2 - 1;
    };
    for (const auto& diag : std::vector<std::vector<int>>{
             {1, 1, 1},
             {1, 1, 1, 1, 1},
             {3, 1, 1},
             {1, 1, 1, 1},
             {1, 1, 1, 1, 1, 1},
             {4, 2, 2, 2}}) {
        const DegreeMatrix a = DegreeMatrix::from_diagonal(diag);
        cases.push_back({diag, 3, single_matrix_threshold(a),
                         "n=3 " + diag_str(diag)});
    }
    for (int k : {2, 3, 4, 5}) {
        cases.push_back({std::vector<int>(2 * k, 1), 4, k,
                         "n=4 linear 2k=" + std::to_string(2 * k)});
    }

    int case_index = 0;
    for (const auto& cs : cases) {
        const DegreeMatrix a = DegreeMatrix::from_diagonal(cs.diag);
        auto run = [&](const PrimeField& field) {
            SeededRng rng = SeededRng(seed).fork(case_index);
            const SkewPolyMatrix g = random_skew(a, cs.n, rng, field);
            GeneratorSet gens{cs.n, {}};
            for (auto& sub : submaximal_pfaffians(g, field))
                gens.members.push_back(std::move(sub.poly));
            return lefschetz_surjective(gens, cs.d, rng, field);
        };
        const RankWitness w1 = run(p1);
        const RankWitness w2 = run(p2);
        Certificate c;
        c.name = "lefschetz " + cs.label + " d=" + std::to_string(cs.d);
        c.pass = w1.full && w2.full;
        std::ostringstream os;
        os << "rank " << w1.rank << "/" << w1.dim_rd << " over F_"
           << p1.modulus() << ", rank " << w2.rank << "/" << w2.dim_rd
           << " over F_" << p2.modulus() << " at seed " << seed;
        c.detail = os.str();
        out.push_back(c);
        ++case_index;
    }
    return out;
}

CertList generic_forms(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2) {
    CertList out;
    struct Case {
        std::vector<int> degrees;
        int d;
        std::string label;
    };
    const std::vector<Case> cases = {
        {{1, 1, 1, 1, 1, 1, 1, 1}, 2, "8 general linear forms, degree 2"},
        {{2, 3, 3, 4, 2, 3, 3, 4}, 6, "degrees (2,3,3,4) doubled, degree 6"},
    };
    int case_index = 0;
    for (const auto& cs : cases) {
        auto run = [&](const PrimeField& field) {
            SeededRng rng = SeededRng(seed).fork(case_index);
            return generic_forms_full(cs.degrees, cs.d, 4, rng, field);
        };
        const RankWitness w1 = run(p1);
        const RankWitness w2 = run(p2);
        Certificate c;
        c.name = "generic forms " + cs.label;
        c.pass = w1.full && w2.full;
        std::ostringstream os;
        os << "rank " << w1.rank << "/" << w1.dim_rd << " over F_"
           << p1.modulus() << ", rank " << w2.rank << "/" << w2.dim_rd
           << " over F_" << p2.modulus() << " at seed " << seed;
        c.detail = os.str();
        out.push_back(c);
        ++case_index;
    }
    return out;
}

}  // namespace pfaffsum::suites
