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

#include "aqc/compile_game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aqc/cmr.hpp"
#include "aqc/random.hpp"

namespace aqc {

namespace {

constexpr int kExhaustiveFreeLimit = 10;   // best_response goes exhaustive below this
constexpr int kCertifyFreeLimit = 12;      // certify searches everything below this
constexpr int kCertifyChainCap = 6;        // otherwise chains up to this size

// Free vertices for the player: not owned by any other chain.
std::vector<int> available_vertices(const CompilationGame& g, const Embedding& profile,
                                    int player) {
  std::vector<char> taken(g.hardware.num_vertices(), 0);
  for (int j = 0; j < profile.num_program_vertices(); ++j) {
    if (j == player) continue;
    for (int h : profile.chains[j]) taken[h] = 1;
  }
  std::vector<int> available;
  for (int h = 0; h < g.hardware.num_vertices(); ++h)
    if (!taken[h]) available.push_back(h);
  return available;
}

bool contacts_all_neighbors(const CompilationGame& g, const Embedding& profile,
                            int player, const std::vector<int>& chain) {
  for (int j : g.program.neighbors(player))
    if (!chains_contact(g.hardware, chain, profile.chains[j])) return false;
  return true;
}

void check_profile_shape(const CompilationGame& g, const Embedding& profile) {
  if (profile.num_program_vertices() != g.program.num_vertices())
    throw std::invalid_argument("profile must hold one chain per program vertex");
}

}  // namespace

bool chains_contact(const Graph& gh, const std::vector<int>& a, const std::vector<int>& b) {
  for (int u : a)
    for (int v : b)
      if (gh.has_edge(u, v)) return true;
  return false;
}

CompilationGame make_compilation_game(Graph program, Graph hardware, double alpha,
                                      std::optional<double> penalty,
                                      DynamicsConfig config) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("compilation game: alpha must be > 0");
  if (hardware.num_vertices() < 1)
    throw std::invalid_argument("compilation game: hardware graph is empty");
  const double feasible_ceiling = alpha * (hardware.num_vertices() - 1);
  const double m = penalty.value_or(feasible_ceiling + 1.0);
  if (!(m > feasible_ceiling))
    throw std::invalid_argument(
        "compilation game: penalty must exceed alpha*(|V_H|-1)");
  if (config.max_passes < 1)
    throw std::invalid_argument("compilation game: max_passes must be >= 1");
  return CompilationGame{std::move(program), std::move(hardware), alpha, m, config};
}

double player_cost(const CompilationGame& g, const Embedding& profile, int player) {
  check_profile_shape(g, profile);
  const std::vector<int>& chain = profile.chains[player];
  if (chain.empty()) return g.penalty;
  for (int h : chain)
    if (h < 0 || h >= g.hardware.num_vertices()) return g.penalty;
  if (!is_connected_subset(g.hardware, chain)) return g.penalty;
  if (!contacts_all_neighbors(g, profile, player, chain)) return g.penalty;
  return g.alpha * static_cast<double>(chain.size() - 1);
}

double profile_total_cost(const CompilationGame& g, const Embedding& profile) {
  double total = 0.0;
  for (int i = 0; i < g.program.num_vertices(); ++i) total += player_cost(g, profile, i);
  return total;
}

std::optional<std::vector<int>> best_response(const CompilationGame& g,
                                              const Embedding& profile, int player) {
  check_profile_shape(g, profile);
  const std::vector<int> available = available_vertices(g, profile, player);
  const std::vector<int>& incumbent = profile.chains[player];
  const double incumbent_cost = player_cost(g, profile, player);
  const bool incumbent_feasible = incumbent_cost < g.penalty;

  const auto& neighbors = g.program.neighbors(player);
  if (neighbors.empty()) {
    // any free vertex is an optimal chain
    if (incumbent_feasible && incumbent_cost == 0.0) return incumbent;
    if (available.empty()) return incumbent_feasible ? std::optional(incumbent) : std::nullopt;
    return std::vector<int>{available.front()};
  }

  if (static_cast<int>(available.size()) <= kExhaustiveFreeLimit) {
    // An improving chain must be strictly smaller than a feasible incumbent.
    const int size_bound = incumbent_feasible ? static_cast<int>(incumbent.size()) - 1
                                              : static_cast<int>(available.size());
    std::optional<std::vector<int>> best;
    if (size_bound >= 1) {
      for_each_connected_subset(
          g.hardware, available, size_bound, [&](const std::vector<int>& s) {
            if (!contacts_all_neighbors(g, profile, player, s)) return true;
            if (!best || s.size() < best->size() || (s.size() == best->size() && s < *best))
              best = s;
            return true;
          });
    }
    if (best) return best;
    if (incumbent_feasible) return incumbent;
    return std::nullopt;
  }

  std::vector<std::vector<int>> terminals;
  terminals.reserve(neighbors.size());
  for (int j : neighbors) terminals.push_back(profile.chains[j]);
  const auto tree = steiner_tree_heuristic(g.hardware, terminals, available);
  if (tree) {
    const double tree_cost = g.alpha * static_cast<double>(tree->vertices.size() - 1);
    if (tree_cost < incumbent_cost) return tree->vertices;
  }
  if (incumbent_feasible) return incumbent;
  return std::nullopt;
}

std::optional<Embedding> init_profile(const CompilationGame& g, std::uint64_t seed) {
  auto embedding = cmr_embed(g.program, g.hardware, seed, g.config.init_tries);
  if (embedding) embedding->alpha = g.alpha;
  return embedding;
}

DynamicsResult run_dynamics(const CompilationGame& g, const Embedding& init,
                            const std::function<void(const Embedding&)>& on_accept) {
  check_profile_shape(g, init);
  if (!verify_minor(init, g.program, g.hardware).ok)
    throw std::invalid_argument("run_dynamics: initial profile fails verification");

  DynamicsResult result;
  result.profile = init;
  result.profile.alpha = g.alpha;
  result.status = DynamicsStatus::MaxPasses;
  result.trace.push_back(profile_total_cost(g, result.profile));

  std::mt19937_64 rng = seeded_rng(g.config.seed);
  const int np = g.program.num_vertices();
  std::vector<int> order(np);
  std::iota(order.begin(), order.end(), 0);

  for (int pass = 1; pass <= g.config.max_passes; ++pass) {
    if (g.config.order == DynamicsConfig::PlayerOrder::Shuffled) {
      std::iota(order.begin(), order.end(), 0);
      shuffle_vec(order, rng);
    }
    bool changed = false;
    for (int player : order) {
      const double current = player_cost(g, result.profile, player);
      const auto reply = best_response(g, result.profile, player);
      if (!reply || *reply == result.profile.chains[player]) continue;
      const double reply_cost = g.alpha * static_cast<double>(reply->size() - 1);
      if (reply_cost < current) {
        result.profile.chains[player] = *reply;
        changed = true;
        if (on_accept) on_accept(result.profile);
      }
    }
    result.passes = pass;
    result.trace.push_back(profile_total_cost(g, result.profile));
    if (!changed) {
      const NashVerdict verdict = certify_nash(g, result.profile);
      result.status = verdict.kind == NashVerdict::Kind::Nash
                          ? DynamicsStatus::NashCertified
                          : DynamicsStatus::ConvergedUncertified;
      break;
    }
  }
  result.total_cost = profile_total_cost(g, result.profile);
  return result;
}

NashVerdict certify_nash(const CompilationGame& g, const Embedding& profile) {
  check_profile_shape(g, profile);
  if (!verify_minor(profile, g.program, g.hardware).ok)
    throw std::invalid_argument("certify_nash: profile fails verification");

  bool fully_searched = true;
  for (int player = 0; player < g.program.num_vertices(); ++player) {
    const std::vector<int> available = available_vertices(g, profile, player);
    // every strictly cheaper chain is strictly smaller
    const int size_bound = static_cast<int>(profile.chains[player].size()) - 1;
    if (size_bound < 1) continue;
    int limit = size_bound;
    if (static_cast<int>(available.size()) > kCertifyFreeLimit &&
        limit > kCertifyChainCap) {
      limit = kCertifyChainCap;
      fully_searched = false;
    }
    std::optional<std::vector<int>> improving;
    for_each_connected_subset(g.hardware, available, limit,
                              [&](const std::vector<int>& s) {
                                if (contacts_all_neighbors(g, profile, player, s)) {
                                  improving = s;
                                  return false;
                                }
                                return true;
                              });
    if (improving) {
      NashVerdict verdict;
      verdict.kind = NashVerdict::Kind::Improvable;
      verdict.player = player;
      verdict.improving_chain = std::move(*improving);
      return verdict;
    }
  }
  NashVerdict verdict;
  verdict.kind =
      fully_searched ? NashVerdict::Kind::Nash : NashVerdict::Kind::Inconclusive;
  return verdict;
}

DynamicsResult solve_compilation_game(const CompilationGame& g) {
  const auto init = init_profile(g, g.config.seed);
  if (!init) {
    DynamicsResult result;
    result.status = DynamicsStatus::Infeasible;
    return result;
  }
  return run_dynamics(g, *init);
}

}  // namespace aqc
