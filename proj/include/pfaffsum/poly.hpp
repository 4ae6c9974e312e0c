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

#ifndef PFAFFSUM_POLY_HPP
#define PFAFFSUM_POLY_HPP

#include <string>
#include <vector>

#include "pfaffsum/field.hpp"
#include "pfaffsum/monomial.hpp"
#include "pfaffsum/rng.hpp"

namespace pfaffsum {

/// Homogeneous form of degree d in n variables, stored as a dense coefficient
/// vector over the canonical monomial basis. The zero form of any degree is
/// the all-zero vector; its degree tag is the slot's nominal degree.
struct HomogeneousPoly {
    int n = 0;
    int d = 0;
    std::vector<FieldElement> coeffs;

    HomogeneousPoly() = default;
    HomogeneousPoly(int n_, int d_)
        : n(n_), d(d_), coeffs(MonomialBasis(n_, d_).size, 0) {}

    bool is_zero() const {
        for (FieldElement c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

HomogeneousPoly poly_add(const HomogeneousPoly& f, const HomogeneousPoly& g,
                         const PrimeField& field);
HomogeneousPoly poly_sub(const HomogeneousPoly& f, const HomogeneousPoly& g,
                         const PrimeField& field);
HomogeneousPoly poly_scale(FieldElement c, const HomogeneousPoly& f,
                           const PrimeField& field);
HomogeneousPoly poly_mul(const HomogeneousPoly& f, const HomogeneousPoly& g,
                         const PrimeField& field);

/// Uniform random form: one rng draw per coefficient, in index order.
HomogeneousPoly random_form(int n, int d, SeededRng& rng, const PrimeField& field);

FieldElement evaluate(const HomogeneousPoly& f,
                      const std::vector<FieldElement>& point,
                      const PrimeField& field);

/// Display rendering, sum of c*x1^a1*...*xn^an terms in index order.
/// Not a parser contract.
std::string render(const HomogeneousPoly& f);

}  // namespace pfaffsum

#endif
