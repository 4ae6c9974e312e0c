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

#include <numeric>

#include "pfaffsum/degree_matrix.hpp"
#include "pfaffsum/rng.hpp"

using namespace pfaffsum;

TEST_CASE("from_diagonal hand values") {
    const DegreeMatrix ones = DegreeMatrix::from_diagonal({1, 1, 1, 1});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(ones.at(i, j) == 1);

    const DegreeMatrix a = DegreeMatrix::from_diagonal({4, 2, 2, 2});
    const std::vector<std::vector<int>> expect = {
        {4, 3, 3, 3}, {3, 2, 2, 2}, {3, 2, 2, 2}, {3, 2, 2, 2}};
    CHECK(a.entries() == expect);
    CHECK(a.trace() == 10);

    CHECK_THROWS_AS(DegreeMatrix::from_diagonal({2, 1, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DegreeMatrix::from_diagonal({2, -2}), std::invalid_argument);
}

TEST_CASE("validate names the violated identity") {
    std::vector<std::vector<int>> ones(4, std::vector<int>(4, 1));
    CHECK_FALSE(validate(ones).has_value());

    auto broken = ones;
    broken[0][1] = 2;
    const auto report = validate(broken);
    REQUIRE(report.has_value());
    CHECK(report->find("[") != std::string::npos);  // indices reported

    CHECK_FALSE(validate(DegreeMatrix::from_diagonal({6, 4, 4, 2}).entries())
                    .has_value());
}

TEST_CASE("order sorts the first column non-increasingly") {
    const DegreeMatrix a = DegreeMatrix::from_diagonal({1, 1, 1, 1});
    const OrderResult r = order(a);
    CHECK(r.permutation == std::vector<int>{0, 1, 2, 3});

    const OrderResult r2 = order(DegreeMatrix::from_diagonal({2, 4, 2}));
    CHECK(r2.permutation.front() == 1);
    CHECK(r2.matrix.diagonal() == std::vector<int>{4, 2, 2});

    // property over random diagonals: output first column non-increasing,
    // and order is idempotent
    SeededRng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> diag(6);
        const int parity = static_cast<int>(rng.next() % 2);
        for (auto& d : diag) d = 2 * static_cast<int>(rng.next() % 4) + parity;
        const OrderResult ord = order(DegreeMatrix::from_diagonal(diag));
        for (int i = 0; i + 1 < 6; ++i)
            CHECK(ord.matrix.at(i, 0) >= ord.matrix.at(i + 1, 0));
        const OrderResult again = order(ord.matrix);
        CHECK(again.permutation == std::vector<int>{0, 1, 2, 3, 4, 5});
    }
}

TEST_CASE("erase") {
    const DegreeMatrix ones = DegreeMatrix::from_diagonal({1, 1, 1, 1});
    CHECK(ones.erase({1, 2}) == DegreeMatrix::from_diagonal({1, 1}));
    CHECK(ones.erase({}) == ones);
    CHECK(DegreeMatrix::from_diagonal({4, 2, 2, 2}).erase({0}) ==
          DegreeMatrix::from_diagonal({2, 2, 2}));
    CHECK_THROWS_AS(ones.erase({4}), std::out_of_range);
    CHECK_THROWS_AS(ones.erase({1, 1}), std::invalid_argument);
}

TEST_CASE("pfaffian and submaximal degrees") {
    const DegreeMatrix ones4 = DegreeMatrix::from_diagonal({1, 1, 1, 1});
    CHECK(ones4.pfaffian_degree() == 2);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(ones4.submaximal_degree(i, j) == 1);

    const DegreeMatrix a = DegreeMatrix::from_diagonal({4, 2, 2, 2});
    CHECK(a.pfaffian_degree() == 5);
    CHECK(a.submaximal_degree(0, 1) == 2);

    const DegreeMatrix ones6 = DegreeMatrix::from_diagonal(std::vector<int>(6, 1));
    CHECK(ones6.pfaffian_degree() == 3);
    int count = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            CHECK(ones6.submaximal_degree(i, j) == 2);
            ++count;
        }
    CHECK(count == 15);

    CHECK_THROWS_AS(DegreeMatrix::from_diagonal({1, 1, 1}).pfaffian_degree(),
                    std::domain_error);
}

TEST_CASE("submaximal degree equals the erased trace half (random property)") {
    SeededRng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> diag(4);
        const int parity = static_cast<int>(rng.next() % 2);
        for (auto& d : diag) d = 2 * static_cast<int>(rng.next() % 4) + parity;
        const DegreeMatrix a = DegreeMatrix::from_diagonal(diag);
        CHECK(a.trace() % 2 == 0);
        CHECK(a.diagonal() == diag);  // round-trip through the diagonal
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                CHECK(a.submaximal_degree(i, j) == a.erase({i, j}).trace() / 2);
    }
}
