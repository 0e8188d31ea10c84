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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "aqc/graph.hpp"
#include "aqc/random.hpp"
#include "oracles.hpp"

using namespace aqc;

TEST_CASE("graph construction normalizes edges") {
  const Graph g(2, {{0, 1}});
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));  // adjacency is symmetric

  const Graph dedup(3, {{0, 1}, {1, 0}});
  CHECK(dedup.num_edges() == 1);

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("standard generators") {
  CHECK(make_cycle(6).num_edges() == 6);
  CHECK(make_cycle(6).num_vertices() == 6);
  CHECK(make_complete(4).num_edges() == 6);
  CHECK(make_path(5).num_edges() == 4);
  CHECK(make_grid(2, 3).num_vertices() == 6);
  CHECK(make_grid(2, 3).num_edges() == 7);
  CHECK(make_random(5, 0.0, 42).num_edges() == 0);
  CHECK(make_random(5, 1.0, 42).num_edges() == 10);

  CHECK_THROWS_AS(make_cycle(0), std::invalid_argument);
  CHECK_THROWS_AS(make_complete(-1), std::invalid_argument);
  CHECK_THROWS_AS(make_random(5, 1.5, 42), std::invalid_argument);

  SUBCASE("gen_standard dispatch") {
    StandardParams params;
    params.n = 6;
    CHECK(gen_standard(StandardKind::Cycle, params) == make_cycle(6));
    params.n = 4;
    CHECK(gen_standard(StandardKind::Complete, params) == make_complete(4));
    params.n = 5;
    params.p = 0.3;
    CHECK_THROWS_AS(gen_standard(StandardKind::Random, params), std::invalid_argument);  // no seed
    params.seed = 7;
    CHECK(gen_standard(StandardKind::Random, params) == make_random(5, 0.3, 7));
  }

  SUBCASE("generators are deterministic") {
    CHECK(make_random(12, 0.4, 99) == make_random(12, 0.4, 99));
    CHECK(make_random(12, 0.4, 99) != make_random(12, 0.4, 100));
  }
}

TEST_CASE("chimera counts match the closed formulas") {
  // 8m^2 vertices and 16m^2 + 8m(m-1) edges, checked by enumeration.
  for (int m = 1; m <= 4; ++m) {
    const Graph g = make_chimera(m);
    CHECK(g.num_vertices() == 8 * m * m);
    CHECK(g.num_edges() == 16 * m * m + 8 * m * (m - 1));
  }
  CHECK(make_chimera(1).num_edges() == 16);
  CHECK(make_chimera(2).num_vertices() == 32);
  CHECK(make_chimera(2).num_edges() == 80);
  CHECK_THROWS_AS(make_chimera(0), std::invalid_argument);

  SUBCASE("unit cell is complete bipartite") {
    const Graph g = make_chimera(1);
    for (int h = 0; h < 4; ++h)
      for (int v = 4; v < 8; ++v) CHECK(g.has_edge(h, v));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(4, 5));
  }

  SUBCASE("intercell couplers run right and down") {
    const Graph g = make_chimera(2);
    // cell (0,0) horizontals pair with cell (0,1) horizontals
    for (int i = 0; i < 4; ++i) CHECK(g.has_edge(i, 8 + i));
    // cell (0,0) verticals pair with cell (1,0) verticals
    for (int i = 4; i < 8; ++i) CHECK(g.has_edge(i, 16 + i));
    CHECK_FALSE(g.has_edge(0, 16));
  }
}

TEST_CASE("is_connected_subset") {
  const Graph c6 = make_cycle(6);
  CHECK(is_connected_subset(c6, {2}));
  CHECK(is_connected_subset(c6, {2, 3, 4}));
  CHECK_FALSE(is_connected_subset(c6, {0, 2}));
  CHECK_FALSE(is_connected_subset(c6, {}));
  CHECK_THROWS_AS(is_connected_subset(c6, {6}), std::invalid_argument);
}

TEST_CASE("shortest_path on the six-cycle") {
  const Graph c6 = make_cycle(6);
  // Two 3-hop routes exist; the lexicographic tie-break goes through vertex 1.
  const auto via1 = shortest_path(c6, 0, {3}, {});
  REQUIRE(via1.has_value());
  CHECK(*via1 == std::vector<int>{0, 1, 2, 3});

  const auto via5 = shortest_path(c6, 0, {3}, {1, 2});
  REQUIRE(via5.has_value());
  CHECK(*via5 == std::vector<int>{0, 5, 4, 3});

  CHECK_FALSE(shortest_path(c6, 0, {3}, {1, 5}).has_value());

  CHECK_THROWS_AS(shortest_path(c6, 0, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(shortest_path(c6, 0, {3}, {0}), std::invalid_argument);

  SUBCASE("src inside dst gives the trivial path") {
    const auto trivial = shortest_path(c6, 2, {2, 4}, {});
    REQUIRE(trivial.has_value());
    CHECK(*trivial == std::vector<int>{2});
  }
}

TEST_CASE("shortest_path agrees with the BFS oracle and is lex-minimal") {
  std::mt19937_64 rng = seeded_rng(2024);
  int checked = 0;
  for (int round = 0; round < 200; ++round) {
    const int n = 4 + static_cast<int>(uniform_below(rng, 9));  // 4..12
    const Graph g = make_random(n, 0.35, rng());
    const int src = static_cast<int>(uniform_below(rng, n));
    std::vector<int> dst;
    for (int v = 0; v < n; ++v)
      if (v != src && uniform_below(rng, 4) == 0) dst.push_back(v);
    if (dst.empty()) dst.push_back((src + 1) % n);
    std::vector<int> forbidden;
    for (int v = 0; v < n; ++v)
      if (v != src && uniform_below(rng, 6) == 0) forbidden.push_back(v);

    const auto path = shortest_path(g, src, dst, forbidden);
    const int oracle = test::oracle_bfs_distance(g, src, dst, forbidden);
    if (!path.has_value()) {
      CHECK(oracle == test::kUnreachable);
      continue;
    }
    REQUIRE(oracle != test::kUnreachable);
    CHECK(static_cast<int>(path->size()) - 1 == oracle);
    const auto all = test::oracle_all_shortest_paths(g, src, dst, forbidden);
    REQUIRE_FALSE(all.empty());
    CHECK(*path == all.front());  // lexicographically smallest
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("steiner heuristic on the six-cycle") {
  const Graph c6 = make_cycle(6);
  // Chains {0} and {1} must be contacted from inside {2,3,4,5}: the only
  // attachment points are 5 and 2, and connecting them uses the whole arc.
  const auto tree = steiner_tree_heuristic(c6, {{0}, {1}}, {2, 3, 4, 5});
  REQUIRE(tree.has_value());
  CHECK(tree->vertices == std::vector<int>{2, 3, 4, 5});
  CHECK(tree->edges.size() == 3);

  SUBCASE("single terminal needs one attachment vertex") {
    const auto single = steiner_tree_heuristic(c6, {{0}}, {2, 3, 4, 5});
    REQUIRE(single.has_value());
    CHECK(single->vertices == std::vector<int>{5});
    CHECK(single->edges.empty());
  }

  SUBCASE("no allowed vertices means no tree") {
    CHECK_FALSE(steiner_tree_heuristic(c6, {{0}, {3}}, {}).has_value());
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(steiner_tree_heuristic(c6, {{}}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(steiner_tree_heuristic(c6, {{0}}, {7}), std::invalid_argument);
  }
}

TEST_CASE("steiner heuristic output satisfies every clause") {
  std::mt19937_64 rng = seeded_rng(7);
  int produced = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = 5 + static_cast<int>(uniform_below(rng, 8));  // 5..12
    const Graph g = make_random(n, 0.3, rng());
    const int num_terminals = 1 + static_cast<int>(uniform_below(rng, 3));
    std::vector<std::vector<int>> terminals(num_terminals);
    for (auto& t : terminals) {
      const int size = 1 + static_cast<int>(uniform_below(rng, 2));
      std::set<int> members;
      while (static_cast<int>(members.size()) < size)
        members.insert(static_cast<int>(uniform_below(rng, n)));
      t.assign(members.begin(), members.end());
    }
    std::vector<int> allowed;
    for (int v = 0; v < n; ++v)
      if (uniform_below(rng, 3) != 0) allowed.push_back(v);

    const auto tree = steiner_tree_heuristic(g, terminals, allowed);
    if (!tree.has_value()) continue;
    ++produced;

    // clause 1: tree vertices stay inside `allowed`
    for (int v : tree->vertices)
      CHECK(std::find(allowed.begin(), allowed.end(), v) != allowed.end());
    // clause 2: connected, and the edge set is a spanning tree
    CHECK(is_connected_subset(g, tree->vertices));
    CHECK(tree->edges.size() + 1 == tree->vertices.size());
    for (const auto& [u, v] : tree->edges) {
      CHECK(g.has_edge(u, v));
      CHECK(std::binary_search(tree->vertices.begin(), tree->vertices.end(), u));
      CHECK(std::binary_search(tree->vertices.begin(), tree->vertices.end(), v));
    }
    // clause 3: every terminal requirement touched (equal or adjacent)
    for (const auto& t : terminals) {
      bool touched = false;
      for (int v : tree->vertices) {
        for (int u : t) {
          if (u == v || g.has_edge(u, v)) {
            touched = true;
            break;
          }
        }
        if (touched) break;
      }
      CHECK(touched);
    }
  }
  CHECK(produced > 30);
}

TEST_CASE("connected subset enumeration matches the bitmask oracle") {
  std::mt19937_64 rng = seeded_rng(31);
  for (int round = 0; round < 60; ++round) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 8));  // 3..10
    const Graph g = make_random(n, 0.4, rng());
    std::vector<int> allowed;
    for (int v = 0; v < n; ++v)
      if (uniform_below(rng, 4) != 0) allowed.push_back(v);
    const int max_size = 1 + static_cast<int>(uniform_below(rng, n));

    std::vector<std::vector<int>> enumerated;
    for_each_connected_subset(g, allowed, max_size, [&](const std::vector<int>& s) {
      enumerated.push_back(s);
      return true;
    });
    std::sort(enumerated.begin(), enumerated.end());
    CHECK(std::adjacent_find(enumerated.begin(), enumerated.end()) == enumerated.end());
    CHECK(enumerated == test::oracle_connected_subsets(g, allowed, max_size));
  }
}
