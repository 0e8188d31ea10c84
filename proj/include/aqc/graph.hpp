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

#ifndef AQC_GRAPH_HPP_INCLUDED
#define AQC_GRAPH_HPP_INCLUDED

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace aqc {

/// Undirected simple graph over dense vertices 0..n-1. No self-loops, no
/// parallel edges; duplicate input edges are deduplicated silently. Immutable
/// after construction, so values are safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::span<const std::pair<int, int>> edge_list);
  Graph(int num_vertices, std::initializer_list<std::pair<int, int>> edge_list);

  int num_vertices() const noexcept { return num_vertices_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;

  /// Neighbor list of v, ascending. Throws on out-of-range v.
  const std::vector<int>& neighbors(int v) const;

  /// Canonical edge list: each edge once as (min,max), sorted ascending.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  bool operator==(const Graph&) const = default;

 private:
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// ---- Topology generators -------------------------------------------------

Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_path(int n);
Graph make_grid(int rows, int cols);

/// Erdos-Renyi G(n,p); one deterministic coin flip per vertex pair, drawn in
/// ascending (u,v) order from the seeded engine.
Graph make_random(int n, double p, std::uint64_t seed);

/// Chimera topology: an m x m grid of K_{4,4} unit cells. Within a cell the
/// four "horizontal" qubits (cell base + 0..3) each couple to the four
/// "vertical" qubits (cell base + 4..7); horizontal qubits couple to their
/// counterparts in the cell to the right, vertical qubits to the cell below.
/// 8m^2 vertices, 16m^2 + 8m(m-1) edges.
Graph make_chimera(int cells_per_side);

enum class StandardKind { Cycle, Complete, Path, Grid, Random };

struct StandardParams {
  int n = 0;
  int rows = 0;
  int cols = 0;
  double p = 0.0;
  std::optional<std::uint64_t> seed;
};

Graph gen_standard(StandardKind kind, const StandardParams& params);

// ---- Connectivity and path primitives --------------------------------------

/// True iff the subgraph induced by `subset` is connected. Empty set is not
/// connected; a singleton is.
bool is_connected_subset(const Graph& g, const std::vector<int>& subset);

/// Minimum-hop path from `src` to any member of `dst`, avoiding `forbidden`
/// vertices entirely (a forbidden destination is unreachable). Ties broken by
/// the lexicographically smallest vertex sequence. Requires src not forbidden
/// and dst nonempty.
std::optional<std::vector<int>> shortest_path(const Graph& g, int src,
                                              const std::vector<int>& dst,
                                              const std::vector<int>& forbidden);

struct SteinerTree {
  std::vector<int> vertices;                 // ascending
  std::vector<std::pair<int, int>> edges;    // spanning tree of `vertices`
};

/// Grow a tree inside `allowed` that, for every terminal set T_k, contains a
/// vertex equal or hardware-adjacent to some member of T_k (the contact
/// condition used for chain-to-chain witnesses). Heuristic: connect the
/// nearest pair of terminal requirements first, then repeatedly attach the
/// requirement nearest to the growing tree via a shortest path. Returns
/// nullopt when no tree satisfying every requirement is found.
std::optional<SteinerTree> steiner_tree_heuristic(
    const Graph& g, const std::vector<std::vector<int>>& terminals,
    const std::vector<int>& allowed);

/// Enumerate every vertex set of size in [1, max_size] that induces a
/// connected subgraph of g within `allowed`, each exactly once, in a fixed
/// deterministic order. `visit` receives ascending members; returning false
/// stops the enumeration.
void for_each_connected_subset(
    const Graph& g, const std::vector<int>& allowed, int max_size,
    const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace aqc

#endif  // AQC_GRAPH_HPP_INCLUDED
