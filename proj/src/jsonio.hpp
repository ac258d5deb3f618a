/*
   Copyright 2026 the qkzpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>

#include "loopmodel.hpp"
#include "qkzcore.hpp"

namespace qkz {

/// {"n":…, "tau":"sym"|rational, "components":[{"a":[…], "value":…}, …]}
/// Symbolic values are coefficient lists (ascending powers of tau),
/// evaluated values rational strings. Components in lexicographic order.
std::string component_table_json(const ComponentTable& table);
std::string component_table_pretty(const ComponentTable& table);

/// {"n":…, "patterns":[[pi(1)..pi(2n)],…], "values":[…],
///  "partial_sums":[{"a":…, "value":…},…], "total":…}
std::string loop_vector_json(const LoopVector& xi);
std::string loop_vector_pretty(const LoopVector& xi);

std::string asm_table_json(int max_n);
std::string asm_table_csv(int max_n);
std::string asm_table_pretty(int max_n);

std::string inhom_component_json(const ComponentIndex& index, const std::vector<ExactScalar>& z,
                                 const ExactScalar& q, const ExactScalar& value);

} // namespace qkz
