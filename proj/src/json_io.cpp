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

#include "pfaffsum/json_io.hpp"

#include <stdexcept>

namespace pfaffsum {

nlohmann::ordered_json witness_to_json(const RankWitness& w) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["prime"] = w.prime;
    j["seed"] = w.seed;
    j["diag"] = w.diag;
    j["n"] = w.n;
    j["s"] = w.s;
    j["degree"] = w.degree;
    j["dim_rd"] = w.dim_rd;
    j["rank"] = w.rank;
    j["columns"] = w.columns;
    j["verdict"] = w.full ? "full" : "deficient";
    j["elapsed_ms"] = w.elapsed_ms;
    return j;
}

std::string witness_to_jsonl(const RankWitness& w) {
    return witness_to_json(w).dump();
}

nlohmann::ordered_json degree_matrix_to_json(const DegreeMatrix& a) {
    nlohmann::ordered_json j;
    j["matrix"] = a.entries();
    return j;
}

DegreeMatrix degree_matrix_from_json(const nlohmann::json& j) {
    if (j.contains("diag"))
        return DegreeMatrix::from_diagonal(j.at("diag").get<std::vector<int>>());
    if (j.contains("matrix"))
        return DegreeMatrix(
            j.at("matrix").get<std::vector<std::vector<int>>>());
    throw std::invalid_argument(
        "degree matrix JSON: expected a \"diag\" or \"matrix\" key");
}

nlohmann::ordered_json skew_matrix_to_json(const SkewPolyMatrix& m) {
    nlohmann::ordered_json j;
    j["n"] = m.vars();
    j["degree_matrix"] = m.degree_matrix().entries();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int i = 0; i < m.size(); ++i)
        for (int k = i + 1; k < m.size(); ++k) {
            nlohmann::ordered_json e;
            e["i"] = i;
            e["j"] = k;
            e["degree"] = m.upper(i, k).d;
            e["coeffs"] = m.upper(i, k).coeffs;
            entries.push_back(std::move(e));
        }
    j["entries"] = std::move(entries);
    return j;
}

}  // namespace pfaffsum
