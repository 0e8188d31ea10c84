// Copyright 2026 The aqcc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQC_IO_HPP_INCLUDED
#define AQC_IO_HPP_INCLUDED

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "aqc/compile_game.hpp"
#include "aqc/embedding.hpp"
#include "aqc/game.hpp"
#include "aqc/graph.hpp"
#include "aqc/ising.hpp"

namespace aqc {

// Edge-list text format: first line `n`, then one `u v` pair per line,
// whitespace-separated; everything from `#` to end of line is a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// DOT rendering with edges in ascending order; isolated vertices get bare
/// statements so the vertex count survives a round trip through tools.
std::string to_dot(const Graph& g);

// JSON schemas. Embedding: {"alpha": number, "chains": {"<v>": [..], ...}}.
nlohmann::json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

nlohmann::json verify_report_to_json(const VerifyReport& report);

nlohmann::json dynamics_result_to_json(const DynamicsResult& result);
std::string dynamics_status_name(DynamicsStatus status);
std::string violation_kind_name(ViolationKind kind);

/// Game JSON: {"players": N, "counts": [..], "payoffs": <nested row-major,
/// innermost = per-player payoff vector>}.
FiniteGame game_from_json(const nlohmann::json& j);

/// Quadratic form JSON: {"n": int, "linear": [i,..], "quadratic": [[i,j],..]}.
QuadraticForm quadratic_form_from_json(const nlohmann::json& j);

}  // namespace aqc

#endif  // AQC_IO_HPP_INCLUDED
