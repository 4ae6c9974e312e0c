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

#ifndef PFAFFSUM_JSON_IO_HPP
#define PFAFFSUM_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "pfaffsum/degree_matrix.hpp"
#include "pfaffsum/skew_matrix.hpp"
#include "pfaffsum/terracini.hpp"

namespace pfaffsum {

/// Field names and layouts are frozen in docs/formats.md.
nlohmann::ordered_json witness_to_json(const RankWitness& w);

/// One JSON object per line; elapsed_ms is the only field excluded from
/// byte-level reproducibility comparisons.
std::string witness_to_jsonl(const RankWitness& w);

nlohmann::ordered_json degree_matrix_to_json(const DegreeMatrix& a);

/// Accepts {"diag": [...]} or {"matrix": [[...], ...]} and normalizes to the
/// full matrix.
DegreeMatrix degree_matrix_from_json(const nlohmann::json& j);

/// Degree matrix plus per-entry coefficient vectors, for witness reproduction.
nlohmann::ordered_json skew_matrix_to_json(const SkewPolyMatrix& m);

}  // namespace pfaffsum

#endif
