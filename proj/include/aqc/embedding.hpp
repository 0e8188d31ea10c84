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

#ifndef AQC_EMBEDDING_HPP_INCLUDED
#define AQC_EMBEDDING_HPP_INCLUDED

#include <optional>
#include <vector>

#include "aqc/graph.hpp"

namespace aqc {

/// Minor embedding: chains[v] is the hardware vertex set carrying program
/// vertex v, kept sorted ascending. A valid embedding has nonempty, pairwise
/// disjoint chains, each inducing a connected subgraph, with a hardware edge
/// witnessing every program edge. `alpha` is the per-edge cost, carried for
/// reporting; a chain of k vertices lays down k-1 tree edges.
struct Embedding {
  double alpha = 1.0;
  std::vector<std::vector<int>> chains;

  int num_program_vertices() const { return static_cast<int>(chains.size()); }
};

enum class ViolationKind {
  EmptyChain,
  DisconnectedChain,
  Overlap,
  MissingEdge,
  OutOfRange,
};

/// One failed check. `a` is the offending program vertex; `b` is the second
/// program vertex for overlap/missing-edge subjects, -1 otherwise.
struct Violation {
  ViolationKind kind;
  int a = -1;
  int b = -1;

  bool operator==(const Violation&) const = default;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Check an ideal compilation: a total injective map with every program edge
/// carried to a hardware edge. Injectivity failures are reported as overlaps.
VerifyReport verify_ideal(const std::vector<int>& map, const Graph& gp, const Graph& gh);

/// Check a minor embedding clause by clause: nonempty connected chains,
/// pairwise disjoint, and a hardware witness edge per program edge. Every
/// failure is enumerated. Requires chains keyed exactly by the program
/// vertices.
VerifyReport verify_minor(const Embedding& e, const Graph& gp, const Graph& gh);

enum class SearchOutcome { Found, Refuted, BudgetExceeded };

struct IdealSearchResult {
  SearchOutcome outcome = SearchOutcome::Refuted;
  std::vector<int> mapping;  // meaningful iff outcome == Found
  long nodes_expanded = 0;
};

/// Backtracking search for an ideal compilation, assigning program vertices
/// in ascending order and trying hardware vertices in ascending order. The
/// budget caps the number of candidate extensions; exceeding it is reported
/// as a distinct outcome, not a refutation.
IdealSearchResult search_ideal(const Graph& gp, const Graph& gh, long budget = 10'000'000);

struct MinEmbeddingResult {
  Embedding embedding;
  double total_cost = 0.0;
};

/// Exhaustive minimum-cost embedding over all disjoint-chain assignments,
/// minimizing alpha * sum(|chain| - 1); ties broken by the lexicographically
/// smallest chain tuple. Enforced to tiny instances (|V_P| <= 4, |V_H| <= 10).
std::optional<MinEmbeddingResult> brute_force_min_embedding(const Graph& gp,
                                                            const Graph& gh,
                                                            double alpha);

}  // namespace aqc

#endif  // AQC_EMBEDDING_HPP_INCLUDED
