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

#ifndef AQC_ISING_HPP_INCLUDED
#define AQC_ISING_HPP_INCLUDED

#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "aqc/graph.hpp"

namespace aqc {

/// Binary quadratic form: which linear and quadratic coefficients are set.
/// Coefficients are restricted to {0,1}; a listed variable or pair means 1.
/// Quadratic keys are canonical (min,max) with distinct endpoints.
struct QuadraticForm {
  int num_vars = 0;
  std::set<int> linear;                       // variables with a unit linear term
  std::set<std::pair<int, int>> quadratic;    // pairs with a unit coupling term

  bool operator==(const QuadraticForm&) const = default;
};

/// Parse the text grammar: terms joined by '+', each `x<i>`, `x<i>*x<j>`, or
/// with an explicit `0*`/`1*` coefficient prefix. Any other coefficient is an
/// error; a `0*` term is recorded only for its variable indices.
QuadraticForm parse_quadratic(std::string_view text);

/// Program graph plus the dense re-indexing used to build it:
/// vertex_labels[new_index] = original variable index.
struct ProgramGraph {
  Graph graph;
  std::vector<int> vertex_labels;
};

/// Build the program graph: vertices are the variables in use (unit linear
/// coefficient or incident to a unit coupling), edges are the couplings.
/// Throws if no variable is in use.
ProgramGraph to_program_graph(const QuadraticForm& qf);

/// Minimal quadratic form whose program graph is `g`: couplings from edges,
/// linear terms only on isolated vertices (the graph retains no other linear
/// information).
QuadraticForm quadratic_from_program_graph(const Graph& g);

}  // namespace aqc

#endif  // AQC_ISING_HPP_INCLUDED
