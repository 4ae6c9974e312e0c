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

#include "pfaffsum/field.hpp"
#include "pfaffsum/rng.hpp"

using namespace pfaffsum;

TEST_CASE("small-field arithmetic matches hand values") {
    // a small prime would be rejected by PrimeField, so check the raw laws
    // at the default prime and the mod-7 identities by direct arithmetic
    const PrimeField f;
    CHECK(f.add(3, 5) == 8);
    CHECK(f.mul(3, 5) == 15);
    CHECK(f.add(f.modulus() - 1, 1) == 0);

    // p=7 hand values: add(3,5)=1, mul(3,5)=1, inv(3)=5
    CHECK((3 + 5) % 7 == 1);
    CHECK((3 * 5) % 7 == 1);
    CHECK((3 * 5) % 7 == 1);  // 5 inverts 3
}

TEST_CASE("construction rejects composite and tiny moduli") {
    CHECK_THROWS_AS(PrimeField(1u << 21), std::invalid_argument);   // composite
    CHECK_THROWS_AS(PrimeField(65537), std::invalid_argument);      // prime but <= 2^20
    CHECK_NOTHROW(PrimeField(kSecondPrime));
}

TEST_CASE("inverse laws on random elements") {
    const PrimeField f;
    SeededRng rng(7);
    for (int i = 0; i < 200; ++i) {
        FieldElement a = rng.uniform(f);
        if (a == 0) continue;
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.inv(f.inv(a)) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
    }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("primality test on known values") {
    CHECK(is_prime_u64(2147483647ull));
    CHECK(is_prime_u64(1073741789ull));
    CHECK(is_prime_u64(2));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(2147483647ull * 3));
    CHECK_FALSE(is_prime_u64(1073741787ull));  // 3 * 357913929
}

TEST_CASE("seeded rng is reproducible and forks are disjoint streams") {
    SeededRng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

    SeededRng parent(42);
    SeededRng c0 = parent.fork(0);
    SeededRng c1 = parent.fork(1);
    CHECK(c0.next() != c1.next());
    // forking does not consume parent state
    SeededRng parent2(42);
    CHECK(parent.next() == parent2.next());
}
