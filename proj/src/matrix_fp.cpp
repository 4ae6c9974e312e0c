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

#include "pfaffsum/matrix_fp.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfaffsum {

void RankAccumulator::reduce_against_basis(std::vector<FieldElement>& v) const {
    const PrimeField& f = *field_;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const FieldElement c = v[pivots_[k]];
        if (c == 0) continue;
        const auto& row = basis_[k];
        const std::int64_t len = static_cast<std::int64_t>(dim_);
#pragma omp parallel for schedule(static) if (len > 4096)
        for (std::int64_t i = 0; i < len; ++i)
            v[i] = f.sub(v[i], f.mul(c, row[i]));
    }
}

bool RankAccumulator::add(std::vector<FieldElement> v) {
    if (v.size() != dim_)
        throw std::invalid_argument("rank accumulator: wrong vector length");
    reduce_against_basis(v);
    std::uint64_t piv = dim_;
    for (std::uint64_t i = 0; i < dim_; ++i)
        if (v[i] != 0) {
            piv = i;
            break;
        }
    if (piv == dim_) return false;
    const FieldElement inv = field_->inv(v[piv]);
    for (auto& x : v) x = field_->mul(inv, x);
    basis_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

void RankAccumulator::add_block(std::vector<std::vector<FieldElement>> columns) {
    const std::int64_t nc = static_cast<std::int64_t>(columns.size());
    // phase 1: reduce every incoming column against the frozen basis
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t j = 0; j < nc; ++j) reduce_against_basis(columns[j]);
    // phase 2: sequential insertion in column order (new pivots interact)
    for (auto& col : columns) add(std::move(col));
}

std::uint64_t rank(const DenseMatrixFp& m, const PrimeField& field) {
    RankAccumulator acc(m.rows, field);
    std::vector<std::vector<FieldElement>> cols(m.cols);
    for (std::uint64_t j = 0; j < m.cols; ++j) {
        cols[j].resize(m.rows);
        for (std::uint64_t i = 0; i < m.rows; ++i) cols[j][i] = m.at(i, j);
    }
    acc.add_block(std::move(cols));
    return acc.rank();
}

FieldElement det_mod_p(const DenseMatrixFp& m, const PrimeField& field) {
    if (m.rows != m.cols)
        throw std::invalid_argument("det: matrix not square");
    DenseMatrixFp w = m;
    const std::uint64_t n = w.rows;
    FieldElement det = 1;
    bool negate = false;
    for (std::uint64_t c = 0; c < n; ++c) {
        std::uint64_t piv = n;
        for (std::uint64_t r = c; r < n; ++r)
            if (w.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv == n) return 0;
        if (piv != c) {
            for (std::uint64_t j = 0; j < n; ++j)
                std::swap(w.at(piv, j), w.at(c, j));
            negate = !negate;
        }
        det = field.mul(det, w.at(c, c));
        const FieldElement inv = field.inv(w.at(c, c));
        for (std::uint64_t r = c + 1; r < n; ++r) {
            const FieldElement factor = field.mul(inv, w.at(r, c));
            if (factor == 0) continue;
            for (std::uint64_t j = c; j < n; ++j)
                w.at(r, j) = field.sub(w.at(r, j), field.mul(factor, w.at(c, j)));
        }
    }
    return negate ? field.neg(det) : det;
}

namespace reference {

std::uint64_t rank_serial(const DenseMatrixFp& m, const PrimeField& field) {
    DenseMatrixFp w = m;
    std::uint64_t rank = 0;
    for (std::uint64_t c = 0; c < w.cols && rank < w.rows; ++c) {
        std::uint64_t piv = w.rows;
        for (std::uint64_t r = rank; r < w.rows; ++r)
            if (w.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv == w.rows) continue;
        if (piv != rank)
            for (std::uint64_t j = 0; j < w.cols; ++j)
                std::swap(w.at(piv, j), w.at(rank, j));
        const FieldElement inv = field.inv(w.at(rank, c));
        for (std::uint64_t r = rank + 1; r < w.rows; ++r) {
            const FieldElement factor = field.mul(inv, w.at(r, c));
            if (factor == 0) continue;
            for (std::uint64_t j = c; j < w.cols; ++j)
                w.at(r, j) = field.sub(w.at(r, j), field.mul(factor, w.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

}  // namespace reference

}  // namespace pfaffsum
