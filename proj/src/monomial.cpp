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

#include "pfaffsum/monomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pfaffsum {

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        // r * (a - b + i) is divisible by i at every step
        r = r * (a - b + i) / i;
    }
    return static_cast<std::uint64_t>(r);
}

MonomialBasis::MonomialBasis(int n_, int d_) : n(n_), d(d_) {
    if (n < 1 || d < 0)
        throw std::invalid_argument("monomial basis: need n >= 1, d >= 0");
    size = binomial(static_cast<std::uint64_t>(n - 1 + d), d);
}

std::uint64_t monomial_index(const std::vector<int>& exponents, int d) {
    const int n = static_cast<int>(exponents.size());
    int sum = 0;
    for (int e : exponents) {
        if (e < 0)
            throw std::invalid_argument("monomial index: negative exponent");
        sum += e;
    }
    if (sum != d)
        throw std::invalid_argument("monomial index: exponents do not sum to degree");
    std::uint64_t idx = 0;
    std::uint64_t prefix = 0;
    for (int j = 1; j < n; ++j) {
        prefix += exponents[j - 1];
        idx += binomial(prefix + j - 1, j);
    }
    return idx;
}

std::vector<int> monomial_unrank(std::uint64_t index, int n, int d) {
    MonomialBasis basis(n, d);
    if (index >= basis.size)
        throw std::invalid_argument("monomial unrank: index out of range");
    std::vector<int> exponents(n, 0);
    std::uint64_t rem = index;
    int prev = n - 1 + d;  // exclusive upper bound for c_{n-1}
    std::vector<int> partial(n, 0);
    for (int j = n - 1; j >= 1; --j) {
        int c = prev - 1;
        while (binomial(c, j) > rem) --c;
        rem -= binomial(c, j);
        partial[j - 1] = c - (j - 1);
        prev = c;
    }
    int before = 0;
    for (int j = 0; j < n - 1; ++j) {
        exponents[j] = partial[j] - before;
        before = partial[j];
    }
    exponents[n - 1] = d - before;
    return exponents;
}

std::vector<std::vector<int>> enumerate_exponents(int n, int d) {
    MonomialBasis basis(n, d);
    std::vector<std::vector<int>> out(basis.size);
    for (std::uint64_t i = 0; i < basis.size; ++i)
        out[i] = monomial_unrank(i, n, d);
    return out;
}

const std::vector<std::vector<int>>& exponent_table(int n, int d) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>,
                    std::unique_ptr<std::vector<std::vector<int>>>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{n, d}];
    if (!slot)
        slot = std::make_unique<std::vector<std::vector<int>>>(
            enumerate_exponents(n, d));
    return *slot;
}

}  // namespace pfaffsum
