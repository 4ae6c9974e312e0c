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

#include "pfaffsum/degree_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pfaffsum {

std::optional<std::string> validate(const std::vector<std::vector<int>>& grid) {
    const int m = static_cast<int>(grid.size());
    for (int i = 0; i < m; ++i)
        if (static_cast<int>(grid[i].size()) != m)
            return "row " + std::to_string(i) + " has wrong length (matrix not square)";
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (grid[i][j] < 0) {
                std::ostringstream os;
                os << "negative entry a[" << i << "][" << j << "] = " << grid[i][j];
                return os.str();
            }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (grid[i][j] != grid[j][i]) {
                std::ostringstream os;
                os << "symmetry violated: a[" << i << "][" << j << "] = "
                   << grid[i][j] << " but a[" << j << "][" << i << "] = "
                   << grid[j][i];
                return os.str();
            }
    // homogeneity reduces to a_ij + a_lj' = a_ij' + a_lj against row 0
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int l = 0; l < m; ++l)
                for (int k = 0; k < m; ++k)
                    if (grid[i][j] + grid[l][k] != grid[i][k] + grid[l][j]) {
                        std::ostringstream os;
                        os << "homogeneity violated at (i,j,l,m) = (" << i
                           << "," << j << "," << l << "," << k << "): "
                           << grid[i][j] << "+" << grid[l][k]
                           << " != " << grid[i][k] << "+" << grid[l][j];
                        return os.str();
                    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if ((grid[i][i] + grid[j][j]) % 2 != 0 ||
                grid[i][j] != (grid[i][i] + grid[j][j]) / 2) {
                std::ostringstream os;
                os << "entry a[" << i << "][" << j
                   << "] does not equal (a_ii + a_jj)/2";
                return os.str();
            }
    if (m % 2 == 0) {
        int tr = 0;
        for (int i = 0; i < m; ++i) tr += grid[i][i];
        if (tr % 2 != 0) return "even size but odd trace";
    }
    return std::nullopt;
}

DegreeMatrix::DegreeMatrix(std::vector<std::vector<int>> entries)
    : m_(static_cast<int>(entries.size())), entries_(std::move(entries)) {
    if (auto err = validate(entries_))
        throw std::invalid_argument("degree matrix: " + *err);
}

DegreeMatrix DegreeMatrix::from_diagonal(const std::vector<int>& diag) {
    const int m = static_cast<int>(diag.size());
    for (int i = 0; i < m; ++i) {
        if (diag[i] < 0)
            throw std::invalid_argument("degree matrix: negative diagonal entry");
        if ((diag[i] - diag[0]) % 2 != 0)
            throw std::invalid_argument("degree matrix: mixed-parity diagonal");
    }
    std::vector<std::vector<int>> grid(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) grid[i][j] = (diag[i] + diag[j]) / 2;
    return DegreeMatrix(std::move(grid));
}

std::vector<int> DegreeMatrix::diagonal() const {
    std::vector<int> d(m_);
    for (int i = 0; i < m_; ++i) d[i] = entries_[i][i];
    return d;
}

int DegreeMatrix::trace() const {
    int tr = 0;
    for (int i = 0; i < m_; ++i) tr += entries_[i][i];
    return tr;
}

int DegreeMatrix::pfaffian_degree() const {
    if (m_ % 2 != 0)
        throw std::domain_error("pfaffian degree: odd-size degree matrix");
    return trace() / 2;
}

int DegreeMatrix::submaximal_degree(int i, int j) const {
    if (i < 0 || j < 0 || i >= m_ || j >= m_)
        throw std::out_of_range("submaximal degree: index out of range");
    return pfaffian_degree() - entries_[i][j];
}

DegreeMatrix DegreeMatrix::erase(const std::vector<int>& indices) const {
    std::vector<bool> drop(m_, false);
    for (int idx : indices) {
        if (idx < 0 || idx >= m_)
            throw std::out_of_range("erase: index out of range");
        if (drop[idx])
            throw std::invalid_argument("erase: repeated index");
        drop[idx] = true;
    }
    std::vector<int> keep;
    for (int i = 0; i < m_; ++i)
        if (!drop[i]) keep.push_back(i);
    std::vector<std::vector<int>> grid(keep.size(), std::vector<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            grid[a][b] = entries_[keep[a]][keep[b]];
    return DegreeMatrix(std::move(grid));
}

OrderResult order(const DegreeMatrix& a) {
    const int m = a.size();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    // first-column entries are (a_ii + a_00)/2, so sorting the diagonal
    // non-increasingly orders the first column
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
        return a.at(x, x) > a.at(y, y);
    });
    std::vector<std::vector<int>> grid(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) grid[i][j] = a.at(perm[i], perm[j]);
    return OrderResult{DegreeMatrix(std::move(grid)), perm};
}

}  // namespace pfaffsum
