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

#include "pfaffsum/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace pfaffsum {

namespace {

void require_same_slot(const HomogeneousPoly& f, const HomogeneousPoly& g) {
    if (f.n != g.n)
        throw std::invalid_argument("poly: variable-count mismatch");
    if (f.d != g.d)
        throw std::invalid_argument("poly: degree mismatch");
}

}  // namespace

HomogeneousPoly poly_add(const HomogeneousPoly& f, const HomogeneousPoly& g,
                         const PrimeField& field) {
    require_same_slot(f, g);
    HomogeneousPoly out(f.n, f.d);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = field.add(f.coeffs[i], g.coeffs[i]);
    return out;
}

HomogeneousPoly poly_sub(const HomogeneousPoly& f, const HomogeneousPoly& g,
                         const PrimeField& field) {
    require_same_slot(f, g);
    HomogeneousPoly out(f.n, f.d);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = field.sub(f.coeffs[i], g.coeffs[i]);
    return out;
}

HomogeneousPoly poly_scale(FieldElement c, const HomogeneousPoly& f,
                           const PrimeField& field) {
    HomogeneousPoly out(f.n, f.d);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = field.mul(c, f.coeffs[i]);
    return out;
}

HomogeneousPoly poly_mul(const HomogeneousPoly& f, const HomogeneousPoly& g,
                         const PrimeField& field) {
    if (f.n != g.n)
        throw std::invalid_argument("poly_mul: variable-count mismatch");
    const int n = f.n;
    HomogeneousPoly out(n, f.d + g.d);
    const auto& ef = exponent_table(n, f.d);
    const auto& eg = exponent_table(n, g.d);
    std::vector<int> sum(n);
    for (std::size_t i = 0; i < ef.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < eg.size(); ++j) {
            if (g.coeffs[j] == 0) continue;
            for (int v = 0; v < n; ++v) sum[v] = ef[i][v] + eg[j][v];
            const std::uint64_t k = monomial_index(sum, out.d);
            out.coeffs[k] =
                field.add(out.coeffs[k], field.mul(f.coeffs[i], g.coeffs[j]));
        }
    }
    return out;
}

HomogeneousPoly random_form(int n, int d, SeededRng& rng, const PrimeField& field) {
    HomogeneousPoly out(n, d);
    for (auto& c : out.coeffs) c = rng.uniform(field);
    return out;
}

FieldElement evaluate(const HomogeneousPoly& f,
                      const std::vector<FieldElement>& point,
                      const PrimeField& field) {
    if (static_cast<int>(point.size()) != f.n)
        throw std::invalid_argument("evaluate: point length mismatch");
    const auto& exps = exponent_table(f.n, f.d);
    FieldElement acc = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        FieldElement term = f.coeffs[i];
        for (int v = 0; v < f.n; ++v)
            if (exps[i][v] > 0)
                term = field.mul(term, field.pow(point[v], exps[i][v]));
        acc = field.add(acc, term);
    }
    return acc;
}

std::string render(const HomogeneousPoly& f) {
    std::ostringstream os;
    bool first = true;
    const auto& exps = exponent_table(f.n, f.d);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << f.coeffs[i];
        for (int v = 0; v < f.n; ++v) {
            if (exps[i][v] == 0) continue;
            os << "*x" << (v + 1);
            if (exps[i][v] > 1) os << "^" << exps[i][v];
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace pfaffsum
