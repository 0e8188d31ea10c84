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

#include "aqc/embedding.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace aqc {

namespace {

bool chain_in_range(const std::vector<int>& chain, int nh) {
  return std::all_of(chain.begin(), chain.end(),
                     [nh](int v) { return v >= 0 && v < nh; });
}

// Hardware edge between two chains?
bool chains_touch(const Graph& gh, const std::vector<int>& a, const std::vector<int>& b) {
  for (int u : a)
    for (int v : b)
      if (gh.has_edge(u, v)) return true;
  return false;
}

}  // namespace

VerifyReport verify_ideal(const std::vector<int>& map, const Graph& gp, const Graph& gh) {
  if (static_cast<int>(map.size()) != gp.num_vertices())
    throw std::invalid_argument("verify_ideal: map must be total on the program vertices");
  VerifyReport report;
  const int nh = gh.num_vertices();
  std::vector<char> bad(map.size(), 0);
  for (int v = 0; v < static_cast<int>(map.size()); ++v) {
    if (map[v] < 0 || map[v] >= nh) {
      report.violations.push_back({ViolationKind::OutOfRange, v, -1});
      bad[v] = 1;
    }
  }
  for (int u = 0; u < static_cast<int>(map.size()); ++u) {
    if (bad[u]) continue;
    for (int v = u + 1; v < static_cast<int>(map.size()); ++v)
      if (!bad[v] && map[u] == map[v])
        report.violations.push_back({ViolationKind::Overlap, u, v});
  }
  for (const auto& [u, v] : gp.edges()) {
    if (bad[u] || bad[v]) continue;
    if (!gh.has_edge(map[u], map[v]))
      report.violations.push_back({ViolationKind::MissingEdge, u, v});
  }
  report.ok = report.violations.empty();
  return report;
}

VerifyReport verify_minor(const Embedding& e, const Graph& gp, const Graph& gh) {
  if (e.num_program_vertices() != gp.num_vertices())
    throw std::invalid_argument("verify_minor: chains must be keyed exactly by V_P");
  VerifyReport report;
  const int np = gp.num_vertices();
  const int nh = gh.num_vertices();

  std::vector<char> usable(np, 1);  // chain is in range and nonempty
  for (int v = 0; v < np; ++v) {
    if (e.chains[v].empty()) {
      report.violations.push_back({ViolationKind::EmptyChain, v, -1});
      usable[v] = 0;
      continue;
    }
    if (!chain_in_range(e.chains[v], nh)) {
      report.violations.push_back({ViolationKind::OutOfRange, v, -1});
      usable[v] = 0;
      continue;
    }
    if (!is_connected_subset(gh, e.chains[v]))
      report.violations.push_back({ViolationKind::DisconnectedChain, v, -1});
  }

  std::vector<int> owner(nh, -1);
  for (int v = 0; v < np; ++v) {
    if (!usable[v]) continue;
    for (int x : e.chains[v]) {
      if (owner[x] != -1 && owner[x] != v) {
        // report each overlapping pair once
        const Violation overlap{ViolationKind::Overlap, std::min(owner[x], v),
                                std::max(owner[x], v)};
        if (std::find(report.violations.begin(), report.violations.end(), overlap) ==
            report.violations.end())
          report.violations.push_back(overlap);
      } else {
        owner[x] = v;
      }
    }
  }

  for (const auto& [u, v] : gp.edges()) {
    if (!usable[u] || !usable[v]) continue;
    if (!chains_touch(gh, e.chains[u], e.chains[v]))
      report.violations.push_back({ViolationKind::MissingEdge, u, v});
  }

  report.ok = report.violations.empty();
  return report;
}

IdealSearchResult search_ideal(const Graph& gp, const Graph& gh, long budget) {
  if (budget <= 0) throw std::invalid_argument("search_ideal: budget must be > 0");
  const int np = gp.num_vertices();
  const int nh = gh.num_vertices();
  IdealSearchResult result;
  std::vector<int> image(np, -1);
  std::vector<char> used(nh, 0);
  bool out_of_budget = false;

  const std::function<bool(int)> place = [&](int v) -> bool {
    if (v == np) return true;
    for (int target = 0; target < nh; ++target) {
      if (used[target]) continue;
      if (++result.nodes_expanded > budget) {
        out_of_budget = true;
        return false;
      }
      bool consistent = true;
      for (int u : gp.neighbors(v)) {
        if (u < v && !gh.has_edge(image[u], target)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      image[v] = target;
      used[target] = 1;
      if (place(v + 1)) return true;
      if (out_of_budget) return false;
      used[target] = 0;
      image[v] = -1;
    }
    return false;
  };

  if (place(0)) {
    result.outcome = SearchOutcome::Found;
    result.mapping = std::move(image);
  } else {
    result.outcome = out_of_budget ? SearchOutcome::BudgetExceeded : SearchOutcome::Refuted;
  }
  return result;
}

std::optional<MinEmbeddingResult> brute_force_min_embedding(const Graph& gp,
                                                            const Graph& gh,
                                                            double alpha) {
  const int np = gp.num_vertices();
  const int nh = gh.num_vertices();
  if (np < 1 || np > 4)
    throw std::invalid_argument("brute_force_min_embedding: |V_P| must be in [1, 4]");
  if (nh < 1 || nh > 10)
    throw std::invalid_argument("brute_force_min_embedding: |V_H| must be in [1, 10]");
  if (!(alpha > 0.0))
    throw std::invalid_argument("brute_force_min_embedding: alpha must be > 0");

  // Bitmask precomputation over the (tiny) hardware graph.
  std::vector<std::uint32_t> nbr_mask(nh, 0);
  for (const auto& [u, v] : gh.edges()) {
    nbr_mask[u] |= 1u << v;
    nbr_mask[v] |= 1u << u;
  }
  const auto mask_connected = [&](std::uint32_t mask) {
    const int first = __builtin_ctz(mask);
    std::uint32_t seen = 1u << first;
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t scan = frontier;
      while (scan) {
        const int v = __builtin_ctz(scan);
        scan &= scan - 1;
        next |= nbr_mask[v] & mask & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    return seen == mask;
  };
  const auto mask_neighborhood = [&](std::uint32_t mask) {
    std::uint32_t out = 0;
    std::uint32_t scan = mask;
    while (scan) {
      const int v = __builtin_ctz(scan);
      scan &= scan - 1;
      out |= nbr_mask[v];
    }
    return out;
  };

  std::vector<int> label(nh, -1);  // which chain owns each hardware vertex
  bool have_best = false;
  int best_sum = nh + 1;
  std::vector<std::vector<int>> best_chains;

  std::vector<std::uint32_t> chain_mask(np, 0);
  std::vector<int> chain_size(np, 0);

  const auto chains_from_labels = [&] {
    std::vector<std::vector<int>> chains(np);
    for (int h = 0; h < nh; ++h)
      if (label[h] != -1) chains[label[h]].push_back(h);
    return chains;
  };

  const std::function<void(int, int)> assign = [&](int h, int used_sum) {
    if (h == nh) {
      int empty = 0;
      for (int v = 0; v < np; ++v) empty += chain_size[v] == 0;
      if (empty > 0) return;
      if (have_best && used_sum > best_sum) return;
      for (int v = 0; v < np; ++v)
        if (!mask_connected(chain_mask[v])) return;
      for (const auto& [u, v] : gp.edges())
        if (!(mask_neighborhood(chain_mask[u]) & chain_mask[v])) return;
      auto chains = chains_from_labels();
      if (!have_best || used_sum < best_sum ||
          (used_sum == best_sum && chains < best_chains)) {
        have_best = true;
        best_sum = used_sum;
        best_chains = std::move(chains);
      }
      return;
    }
    // prune: every still-empty chain needs at least one of the remaining vertices
    int empty = 0;
    for (int v = 0; v < np; ++v) empty += chain_size[v] == 0;
    if (empty > nh - h) return;
    if (have_best && used_sum + empty > best_sum) return;

    assign(h + 1, used_sum);  // leave h unused
    for (int v = 0; v < np; ++v) {
      label[h] = v;
      chain_mask[v] |= 1u << h;
      ++chain_size[v];
      assign(h + 1, used_sum + 1);
      --chain_size[v];
      chain_mask[v] &= ~(1u << h);
      label[h] = -1;
    }
  };
  assign(0, 0);

  if (!have_best) return std::nullopt;
  MinEmbeddingResult out;
  out.embedding.alpha = alpha;
  out.embedding.chains = std::move(best_chains);
  out.total_cost = alpha * static_cast<double>(best_sum - np);
  return out;
}

}  // namespace aqc
