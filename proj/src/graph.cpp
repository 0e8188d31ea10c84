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

#include "aqc/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "aqc/random.hpp"

namespace aqc {

namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n)
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n) + ")");
}

void check_positive(int value, const char* what) {
  if (value < 1)
    throw std::invalid_argument(std::string(what) + " must be >= 1, got " +
                                std::to_string(value));
}

// Multi-source lexicographically smallest minimum-hop path. `target` and
// `allowed` are vertex flags; sources must be allowed. Walks greedily along
// decreasing BFS distance-to-target, always taking the smallest neighbor,
// which yields the lexicographically smallest sequence among all minimum-hop
// source-to-target paths.
std::optional<std::vector<int>> lex_shortest_path(const Graph& g,
                                                  const std::vector<int>& sources,
                                                  const std::vector<char>& target,
                                                  const std::vector<char>& allowed) {
  const int n = g.num_vertices();
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (target[v] && allowed[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (allowed[w] && dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }

  int best = -1;
  int start = -1;
  for (int s : sources) {
    if (dist[s] == -1) continue;
    if (best == -1 || dist[s] < best || (dist[s] == best && s < start)) {
      best = dist[s];
      start = s;
    }
  }
  if (best == -1) return std::nullopt;

  std::vector<int> path{start};
  int current = start;
  while (dist[current] > 0) {
    for (int w : g.neighbors(current)) {  // ascending, so first hit is smallest
      if (allowed[w] && dist[w] == dist[current] - 1) {
        path.push_back(w);
        current = w;
        break;
      }
    }
  }
  return path;
}

}  // namespace

Graph::Graph(int num_vertices, std::span<const std::pair<int, int>> edge_list)
    : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("vertex count must be >= 0");
  edges_.reserve(edge_list.size());
  for (const auto& [u, v] : edge_list) {
    check_vertex(u, num_vertices_, "edge endpoint");
    check_vertex(v, num_vertices_, "edge endpoint");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.resize(num_vertices_);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph::Graph(int num_vertices, std::initializer_list<std::pair<int, int>> edge_list)
    : Graph(num_vertices, std::span<const std::pair<int, int>>(edge_list.begin(),
                                                               edge_list.size())) {}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, num_vertices_, "has_edge");
  check_vertex(v, num_vertices_, "has_edge");
  if (u == v) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v, num_vertices_, "neighbors");
  return adjacency_[v];
}

Graph make_cycle(int n) {
  check_positive(n, "cycle size");
  std::vector<std::pair<int, int>> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
  } else if (n >= 3) {
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  }
  return Graph(n, edges);
}

Graph make_complete(int n) {
  check_positive(n, "complete graph size");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_path(int n) {
  check_positive(n, "path size");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_grid(int rows, int cols) {
  check_positive(rows, "grid rows");
  check_positive(cols, "grid cols");
  std::vector<std::pair<int, int>> edges;
  const auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(rows * cols, edges);
}

Graph make_random(int n, double p, std::uint64_t seed) {
  check_positive(n, "random graph size");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng = seeded_rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_chimera(int cells_per_side) {
  check_positive(cells_per_side, "chimera cells per side");
  const int m = cells_per_side;
  std::vector<std::pair<int, int>> edges;
  const auto base = [m](int r, int c) { return 8 * (r * m + c); };
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      const int b = base(r, c);
      for (int h = 0; h < 4; ++h)
        for (int v = 0; v < 4; ++v) edges.emplace_back(b + h, b + 4 + v);
      if (c + 1 < m)
        for (int h = 0; h < 4; ++h) edges.emplace_back(b + h, base(r, c + 1) + h);
      if (r + 1 < m)
        for (int v = 0; v < 4; ++v)
          edges.emplace_back(b + 4 + v, base(r + 1, c) + 4 + v);
    }
  }
  return Graph(8 * m * m, edges);
}

Graph gen_standard(StandardKind kind, const StandardParams& params) {
  switch (kind) {
    case StandardKind::Cycle:
      return make_cycle(params.n);
    case StandardKind::Complete:
      return make_complete(params.n);
    case StandardKind::Path:
      return make_path(params.n);
    case StandardKind::Grid:
      return make_grid(params.rows, params.cols);
    case StandardKind::Random:
      if (!params.seed.has_value())
        throw std::invalid_argument("random graph generation requires a seed");
      return make_random(params.n, params.p, *params.seed);
  }
  throw std::invalid_argument("unknown standard graph kind");
}

bool is_connected_subset(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::vector<char> member(g.num_vertices(), 0);
  for (int v : subset) {
    check_vertex(v, g.num_vertices(), "is_connected_subset");
    member[v] = 1;
  }
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<int> queue{subset.front()};
  seen[subset.front()] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (member[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  std::size_t distinct = 0;
  for (int v = 0; v < g.num_vertices(); ++v) distinct += member[v];
  return reached == distinct;
}

std::optional<std::vector<int>> shortest_path(const Graph& g, int src,
                                              const std::vector<int>& dst,
                                              const std::vector<int>& forbidden) {
  const int n = g.num_vertices();
  check_vertex(src, n, "shortest_path src");
  if (dst.empty()) throw std::invalid_argument("shortest_path: empty destination set");
  std::vector<char> allowed(n, 1);
  for (int v : forbidden) {
    check_vertex(v, n, "shortest_path forbidden");
    allowed[v] = 0;
  }
  if (!allowed[src]) throw std::invalid_argument("shortest_path: src is forbidden");
  std::vector<char> target(n, 0);
  for (int v : dst) {
    check_vertex(v, n, "shortest_path dst");
    target[v] = 1;
  }
  return lex_shortest_path(g, {src}, target, allowed);
}

std::optional<SteinerTree> steiner_tree_heuristic(
    const Graph& g, const std::vector<std::vector<int>>& terminals,
    const std::vector<int>& allowed) {
  const int n = g.num_vertices();
  if (terminals.empty())
    throw std::invalid_argument("steiner_tree_heuristic: no terminal sets");
  std::vector<char> allowed_flag(n, 0);
  for (int v : allowed) {
    check_vertex(v, n, "steiner allowed");
    allowed_flag[v] = 1;
  }

  // Attachment set per requirement: allowed vertices equal or adjacent to a
  // terminal member. The tree meets requirement k iff it touches A_k.
  const int num_req = static_cast<int>(terminals.size());
  std::vector<std::vector<int>> attach(num_req);
  for (int k = 0; k < num_req; ++k) {
    if (terminals[k].empty())
      throw std::invalid_argument("steiner_tree_heuristic: empty terminal set");
    std::vector<char> in_attach(n, 0);
    for (int u : terminals[k]) {
      check_vertex(u, n, "steiner terminal");
      if (allowed_flag[u]) in_attach[u] = 1;
      for (int w : g.neighbors(u))
        if (allowed_flag[w]) in_attach[w] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (in_attach[v]) attach[k].push_back(v);
    if (attach[k].empty()) return std::nullopt;
  }

  std::vector<char> in_tree(n, 0);
  std::vector<int> tree_vertices;
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<char> met(num_req, 0);

  const auto add_vertex = [&](int v) {
    if (!in_tree[v]) {
      in_tree[v] = 1;
      tree_vertices.push_back(v);
    }
  };
  const auto refresh_met = [&] {
    for (int k = 0; k < num_req; ++k) {
      if (met[k]) continue;
      for (int v : attach[k]) {
        if (in_tree[v]) {
          met[k] = 1;
          break;
        }
      }
    }
  };

  if (num_req == 1) {
    return SteinerTree{{attach[0].front()}, {}};
  }

  // Seed the tree with the closest pair of requirements.
  std::optional<std::vector<int>> seed_path;
  for (int k = 0; k < num_req; ++k) {
    for (int l = k + 1; l < num_req; ++l) {
      std::vector<char> target(n, 0);
      for (int v : attach[l]) target[v] = 1;
      const auto path = lex_shortest_path(g, attach[k], target, allowed_flag);
      if (path && (!seed_path || path->size() < seed_path->size())) seed_path = path;
    }
  }
  if (!seed_path) return std::nullopt;
  add_vertex(seed_path->front());
  for (std::size_t i = 1; i < seed_path->size(); ++i) {
    add_vertex((*seed_path)[i]);
    const int a = (*seed_path)[i - 1];
    const int b = (*seed_path)[i];
    tree_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  refresh_met();

  // Attach the remaining requirements, nearest first.
  while (true) {
    int pending = -1;
    std::optional<std::vector<int>> best_path;
    for (int k = 0; k < num_req; ++k) {
      if (met[k]) continue;
      std::vector<char> target(n, 0);
      for (int v : attach[k]) target[v] = 1;
      const auto path = lex_shortest_path(g, tree_vertices, target, allowed_flag);
      if (path && (!best_path || path->size() < best_path->size())) {
        best_path = path;
        pending = k;
      }
    }
    if (pending == -1) {
      bool all_met = true;
      for (int k = 0; k < num_req; ++k) all_met = all_met && met[k];
      if (all_met) break;
      return std::nullopt;  // some requirement is unreachable from the tree
    }
    for (std::size_t i = 1; i < best_path->size(); ++i) {
      add_vertex((*best_path)[i]);
      const int a = (*best_path)[i - 1];
      const int b = (*best_path)[i];
      tree_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    met[pending] = 1;
    refresh_met();
  }

  // Prune: merged paths leave tails no requirement needs. Repeatedly drop the
  // smallest leaf whose removal keeps every requirement covered.
  std::vector<std::vector<char>> in_attach(num_req, std::vector<char>(n, 0));
  std::vector<int> cover_count(num_req, 0);
  for (int k = 0; k < num_req; ++k) {
    for (int v : attach[k]) in_attach[k][v] = 1;
    for (int v : tree_vertices) cover_count[k] += in_attach[k][v];
  }
  bool pruned = true;
  while (pruned && tree_vertices.size() > 1) {
    pruned = false;
    std::vector<int> degree(n, 0);
    for (const auto& [u, v] : tree_edges) {
      ++degree[u];
      ++degree[v];
    }
    std::sort(tree_vertices.begin(), tree_vertices.end());
    for (int v : tree_vertices) {
      if (degree[v] != 1) continue;
      bool needed = false;
      for (int k = 0; k < num_req && !needed; ++k)
        needed = in_attach[k][v] && cover_count[k] == 1;
      if (needed) continue;
      std::erase(tree_vertices, v);
      std::erase_if(tree_edges,
                    [v](const std::pair<int, int>& e) { return e.first == v || e.second == v; });
      for (int k = 0; k < num_req; ++k) cover_count[k] -= in_attach[k][v];
      in_tree[v] = 0;
      pruned = true;
      break;
    }
  }

  std::sort(tree_vertices.begin(), tree_vertices.end());
  std::sort(tree_edges.begin(), tree_edges.end());
  return SteinerTree{std::move(tree_vertices), std::move(tree_edges)};
}

void for_each_connected_subset(
    const Graph& g, const std::vector<int>& allowed, int max_size,
    const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = g.num_vertices();
  std::vector<char> ok(n, 0);
  for (int v : allowed) {
    check_vertex(v, n, "connected subset enumeration");
    ok[v] = 1;
  }
  if (max_size < 1) return;
  std::vector<int> anchors;
  for (int v = 0; v < n; ++v)
    if (ok[v]) anchors.push_back(v);

  // ESU-style enumeration: each connected set is generated exactly once, in
  // the branch anchored at its smallest vertex; `covered` tracks the current
  // subtree's members and neighborhood so extensions stay exclusive.
  std::vector<char> covered(n, 0);
  std::vector<int> sub;
  bool keep_going = true;

  const std::function<void(std::vector<int>&, int)> extend = [&](std::vector<int>& ext,
                                                                 int anchor) {
    {
      std::vector<int> sorted_sub = sub;
      std::sort(sorted_sub.begin(), sorted_sub.end());
      keep_going = visit(sorted_sub);
    }
    if (!keep_going || static_cast<int>(sub.size()) == max_size) return;
    std::vector<int> remaining = ext;
    while (!remaining.empty() && keep_going) {
      const int w = remaining.front();
      remaining.erase(remaining.begin());
      std::vector<int> fresh;
      for (int u : g.neighbors(w))
        if (ok[u] && u > anchor && !covered[u]) fresh.push_back(u);
      for (int u : fresh) covered[u] = 1;
      std::vector<int> next(remaining.size() + fresh.size());
      std::merge(remaining.begin(), remaining.end(), fresh.begin(), fresh.end(),
                 next.begin());
      sub.push_back(w);
      extend(next, anchor);
      sub.pop_back();
      for (int u : fresh) covered[u] = 0;
    }
  };

  for (int anchor : anchors) {
    if (!keep_going) break;
    sub.assign(1, anchor);
    covered[anchor] = 1;
    std::vector<int> ext;
    for (int u : g.neighbors(anchor)) {
      if (ok[u] && u > anchor) {
        ext.push_back(u);
        covered[u] = 1;
      }
    }
    extend(ext, anchor);
    covered[anchor] = 0;
    for (int u : g.neighbors(anchor))
      if (ok[u] && u > anchor) covered[u] = 0;
    sub.clear();
  }
}

}  // namespace aqc
