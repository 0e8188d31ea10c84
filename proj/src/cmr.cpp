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

#include "aqc/cmr.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aqc/random.hpp"

namespace aqc {

namespace {

std::optional<Embedding> try_embed(const Graph& gp, const Graph& gh,
                                   std::mt19937_64& rng) {
  const int np = gp.num_vertices();
  const int nh = gh.num_vertices();
  std::vector<std::vector<int>> chains(np);
  std::vector<int> owner(nh, -1);
  std::vector<char> embedded(np, 0);

  const auto place = [&](int program_vertex, int hardware_vertex) {
    chains[program_vertex].push_back(hardware_vertex);
    owner[hardware_vertex] = program_vertex;
  };
  const auto finish = [&]() -> std::optional<Embedding> {
    Embedding e;
    e.chains = std::move(chains);
    for (auto& chain : e.chains) std::sort(chain.begin(), chain.end());
    if (!verify_minor(e, gp, gh).ok) return std::nullopt;
    return e;
  };

  if (np == 0) return finish();
  if (nh == 0) return std::nullopt;

  std::vector<int> order(np);
  std::iota(order.begin(), order.end(), 0);
  shuffle_vec(order, rng);

  const int first = order[0];
  const int root_a = static_cast<int>(uniform_below(rng, nh));
  if (np == 1) {
    place(first, root_a);
    embedded[first] = 1;
    return finish();
  }
  if (nh < 2) return std::nullopt;

  // Two random distinct positions, joined by a shortest path; the interior
  // grows the first vertex's chain.
  const int second = order[1];
  const int offset = static_cast<int>(uniform_below(rng, nh - 1));
  const int root_b = offset >= root_a ? offset + 1 : offset;
  place(first, root_a);
  place(second, root_b);
  embedded[first] = 1;
  embedded[second] = 1;
  const auto seed_path = shortest_path(gh, root_a, {root_b}, {});
  if (!seed_path) return std::nullopt;
  for (std::size_t i = 1; i + 1 < seed_path->size(); ++i) place(first, (*seed_path)[i]);

  for (int k = 2; k < np; ++k) {
    const int v = order[k];
    std::vector<int> free_vertices;
    for (int h = 0; h < nh; ++h)
      if (owner[h] == -1) free_vertices.push_back(h);
    if (free_vertices.empty()) return std::nullopt;
    const int root =
        free_vertices[uniform_below(rng, static_cast<std::uint64_t>(free_vertices.size()))];
    place(v, root);
    embedded[v] = 1;

    for (int u : gp.neighbors(v)) {
      if (!embedded[u]) continue;
      // Route root -> chain(u) through free vertices and v's own chain only.
      std::vector<int> forbidden;
      for (int h = 0; h < nh; ++h)
        if (owner[h] != -1 && owner[h] != v && owner[h] != u) forbidden.push_back(h);
      const auto path = shortest_path(gh, root, chains[u], forbidden);
      if (!path) return std::nullopt;
      for (std::size_t i = 1; i + 1 < path->size(); ++i) {
        const int x = (*path)[i];
        if (owner[x] == -1) place(v, x);
      }
    }
  }
  return finish();
}

}  // namespace

std::optional<Embedding> cmr_embed(const Graph& gp, const Graph& gh,
                                   std::uint64_t seed, int tries) {
  if (tries < 1) throw std::invalid_argument("cmr_embed: tries must be >= 1");
  for (int t = 0; t < tries; ++t) {
    std::mt19937_64 rng = seeded_rng(seed, static_cast<std::uint64_t>(t));
    if (auto embedding = try_embed(gp, gh, rng)) return embedding;
  }
  return std::nullopt;
}

CmrStats cmr_embed_stats(const Graph& gp, const Graph& gh, std::uint64_t seed,
                         int tries) {
  if (tries < 1) throw std::invalid_argument("cmr_embed_stats: tries must be >= 1");
  CmrStats stats;
  stats.tries = tries;
  for (int t = 0; t < tries; ++t) {
    std::mt19937_64 rng = seeded_rng(seed, static_cast<std::uint64_t>(t));
    if (try_embed(gp, gh, rng)) {
      ++stats.successes;
      if (stats.first_success == -1) stats.first_success = t;
    }
  }
  return stats;
}

}  // namespace aqc
