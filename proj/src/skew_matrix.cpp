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

#include "pfaffsum/skew_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace pfaffsum {

namespace {

int upper_offset(int m, int i, int j) {
    // row-major strict upper triangle
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

int mask_pfaffian_degree(const DegreeMatrix& a, std::uint32_t mask) {
    int tr = 0;
    for (int i = 0; i < a.size(); ++i)
        if (mask & (1u << i)) tr += a.at(i, i);
    return tr / 2;
}

}  // namespace

SkewPolyMatrix::SkewPolyMatrix(DegreeMatrix a, int n) : a_(std::move(a)), n_(n) {
    const int m = a_.size();
    if (m > kMaxSkewSize)
        throw std::invalid_argument("skew matrix: size exceeds the cap of 16");
    entries_.reserve(m * (m - 1) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            entries_.emplace_back(n_, a_.at(i, j));
}

const HomogeneousPoly& SkewPolyMatrix::upper(int i, int j) const {
    if (!(0 <= i && i < j && j < size()))
        throw std::out_of_range("skew matrix: upper(i,j) requires 0 <= i < j < m");
    return entries_[upper_offset(size(), i, j)];
}

void SkewPolyMatrix::set_upper(int i, int j, HomogeneousPoly f) {
    if (!(0 <= i && i < j && j < size()))
        throw std::out_of_range("skew matrix: set_upper(i,j) requires 0 <= i < j < m");
    if (f.n != n_ || f.d != a_.at(i, j))
        throw std::invalid_argument("skew matrix: entry does not conform to the degree matrix");
    entries_[upper_offset(size(), i, j)] = std::move(f);
}

DenseMatrixFp SkewPolyMatrix::evaluate_at(const std::vector<FieldElement>& point,
                                          const PrimeField& field) const {
    const int m = size();
    DenseMatrixFp s(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const FieldElement v = evaluate(upper(i, j), point, field);
            s.at(i, j) = v;
            s.at(j, i) = field.neg(v);
        }
    return s;
}

SkewPolyMatrix random_skew(const DegreeMatrix& a, int n, SeededRng& rng,
                           const PrimeField& field) {
    SkewPolyMatrix m(a, n);
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            m.set_upper(i, j, random_form(n, a.at(i, j), rng, field));
    return m;
}

PfaffianEngine::PfaffianEngine(const SkewPolyMatrix& m, const PrimeField& field)
    : m_(&m), field_(&field) {}

const HomogeneousPoly& PfaffianEngine::pfaffian(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;

    const int popcount = std::popcount(mask);
    if (popcount % 2 != 0)
        throw std::domain_error("pfaffian: odd-size submatrix");

    const int deg = mask_pfaffian_degree(m_->degree_matrix(), mask);
    HomogeneousPoly result(m_->vars(), deg);
    if (mask == 0) {
        result.coeffs[0] = 1;  // Pf of the empty matrix
    } else {
        std::vector<int> idx;
        for (int i = 0; i < m_->size(); ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const int i0 = idx[0];
        bool positive = true;  // sign of the t-th term, (-1)^(t+1)
        for (std::size_t t = 1; t < idx.size(); ++t) {
            const int jt = idx[t];
            const std::uint32_t sub = mask & ~(1u << i0) & ~(1u << jt);
            const HomogeneousPoly term =
                poly_mul(m_->upper(i0, jt), pfaffian(sub), *field_);
            result = positive ? poly_add(result, term, *field_)
                              : poly_sub(result, term, *field_);
            positive = !positive;
        }
    }
    return memo_.emplace(mask, std::move(result)).first->second;
}

const HomogeneousPoly& PfaffianEngine::pfaffian() {
    const int m = m_->size();
    if (m % 2 != 0)
        throw std::domain_error("pfaffian: odd-size matrix");
    return pfaffian(m == 32 ? ~0u : (1u << m) - 1);
}

HomogeneousPoly pfaffian(const SkewPolyMatrix& m, const PrimeField& field) {
    PfaffianEngine engine(m, field);
    return engine.pfaffian();
}

std::vector<SubmaximalPfaffian> submaximal_pfaffians(const SkewPolyMatrix& m,
                                                     const PrimeField& field) {
    const int size = m.size();
    if (size < 2)
        throw std::invalid_argument("submaximal pfaffians: size must be >= 2");
    PfaffianEngine engine(m, field);
    const std::uint32_t full = (1u << size) - 1;
    std::vector<SubmaximalPfaffian> out;
    if (size % 2 == 0) {
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                out.push_back({i, j,
                               engine.pfaffian(full & ~(1u << i) & ~(1u << j))});
    } else {
        for (int i = 0; i < size; ++i)
            out.push_back({i, -1, engine.pfaffian(full & ~(1u << i))});
    }
    return out;
}

FieldElement pfaffian_scalar(const DenseMatrixFp& s, const PrimeField& field) {
    if (s.rows != s.cols)
        throw std::invalid_argument("pfaffian: matrix not square");
    const int m = static_cast<int>(s.rows);
    if (m % 2 != 0)
        throw std::domain_error("pfaffian: odd size");
    if (m > kMaxSkewSize)
        throw std::invalid_argument("pfaffian: size exceeds the cap of 16");
    std::unordered_map<std::uint32_t, FieldElement> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> FieldElement {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const int i0 = idx[0];
        FieldElement acc = 0;
        bool positive = true;
        for (std::size_t t = 1; t < idx.size(); ++t) {
            const int jt = idx[t];
            const FieldElement term = field.mul(
                s.at(i0, jt), self(self, mask & ~(1u << i0) & ~(1u << jt)));
            acc = positive ? field.add(acc, term) : field.sub(acc, term);
            positive = !positive;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (1u << m) - 1);
}

IdentityCheckResult pfaffian_identity_check(const SkewPolyMatrix& m, int trials,
                                            SeededRng& rng,
                                            const PrimeField& field) {
    const int size = m.size();
    if (size % 2 != 0)
        throw std::domain_error("pfaffian identity check: odd size");
    const HomogeneousPoly pf = pfaffian(m, field);
    const auto subs = submaximal_pfaffians(m, field);
    for (int t = 0; t < trials; ++t) {
        std::vector<FieldElement> point(m.vars());
        for (auto& x : point) x = rng.uniform(field);

        const DenseMatrixFp s = m.evaluate_at(point, field);
        const FieldElement pf_num = pfaffian_scalar(s, field);
        const FieldElement pf_sym = evaluate(pf, point, field);
        const FieldElement det = det_mod_p(s, field);
        bool ok = pf_sym == pf_num && field.mul(pf_num, pf_num) == det;

        if (ok) {
            // first-row expansion: Pf = sum_j (-1)^j m_1j Pf(M_{1^ j^})
            FieldElement acc = 0;
            bool positive = true;
            for (const auto& sub : subs) {
                if (sub.i != 0) continue;
                const FieldElement term =
                    field.mul(s.at(0, sub.j), evaluate(sub.poly, point, field));
                acc = positive ? field.add(acc, term) : field.sub(acc, term);
                positive = !positive;
            }
            ok = acc == pf_num;
        }
        if (!ok) return {false, point};
    }
    return {true, {}};
}

}  // namespace pfaffsum
