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

#ifndef AQC_COMPILE_GAME_HPP_INCLUDED
#define AQC_COMPILE_GAME_HPP_INCLUDED

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "aqc/embedding.hpp"
#include "aqc/graph.hpp"

namespace aqc {

/// Hardware edge between the two vertex sets?
bool chains_contact(const Graph& gh, const std::vector<int>& a, const std::vector<int>& b);

struct DynamicsConfig {
  int max_passes = 100;
  enum class PlayerOrder { Ascending, Shuffled } order = PlayerOrder::Ascending;
  std::uint64_t seed = 0;  // drives shuffled orders and profile initialization
  int init_tries = 50;
};

/// The compilation game: players are the program vertices, a strategy is a
/// chain in the hardware graph, and a feasible chain of k vertices costs
/// alpha*(k-1). A chain that is disconnected or misses a contact to some
/// program neighbor's chain pays the flat penalty instead; the penalty must
/// exceed alpha*(|V_H|-1) so that any feasible chain beats infeasibility.
struct CompilationGame {
  Graph program;
  Graph hardware;
  double alpha = 1.0;
  double penalty = 0.0;
  DynamicsConfig config;
};

/// Validates alpha/penalty; penalty defaults to alpha*(|V_H|-1)+1.
CompilationGame make_compilation_game(Graph program, Graph hardware, double alpha,
                                      std::optional<double> penalty = std::nullopt,
                                      DynamicsConfig config = {});

/// Cost of player i under the profile: alpha*(|chain|-1) when the chain is
/// connected and contacts every program neighbor's chain, the penalty
/// otherwise. Disjointness is a profile invariant, not a per-player matter.
double player_cost(const CompilationGame& g, const Embedding& profile, int player);

/// Sum of player costs.
double profile_total_cost(const CompilationGame& g, const Embedding& profile);

/// Cheapest chain for player i against the fixed chains of everyone else:
/// exhaustive over connected subsets of the free vertices when at most 10 are
/// free, Steiner-heuristic otherwise. The incumbent chain is always a
/// candidate, so the result never costs more than it; ties keep the
/// incumbent. Nullopt when no feasible chain is found at all.
std::optional<std::vector<int>> best_response(const CompilationGame& g,
                                              const Embedding& profile, int player);

/// Feasible starting profile from the probabilistic baseline, or nullopt
/// after config.init_tries failures.
std::optional<Embedding> init_profile(const CompilationGame& g, std::uint64_t seed);

enum class DynamicsStatus { NashCertified, ConvergedUncertified, MaxPasses, Infeasible };

struct DynamicsResult {
  Embedding profile;
  DynamicsStatus status = DynamicsStatus::Infeasible;
  int passes = 0;
  double total_cost = 0.0;
  std::vector<double> trace;  // total cost before pass 1, then after each pass
};

struct NashVerdict {
  enum class Kind { Nash, Improvable, Inconclusive } kind = Kind::Inconclusive;
  int player = -1;                  // set for Improvable
  std::vector<int> improving_chain; // set for Improvable
};

/// Iterated best response over passes of all players (ascending by default,
/// seeded shuffle per pass otherwise). A player switches only on a strict
/// cost improvement, so total cost decreases monotonically and the dynamics
/// terminate. A pass with no change triggers certification. `on_accept`, when
/// set, observes the profile after every accepted move.
DynamicsResult run_dynamics(const CompilationGame& g, const Embedding& init,
                            const std::function<void(const Embedding&)>& on_accept = {});

/// Unilateral-deviation audit of a valid profile. For each player, every
/// strictly cheaper chain has fewer vertices than the incumbent, so the
/// search enumerates connected subsets of the free vertices up to size
/// |chain|-1, additionally capped at 6 when more than 12 vertices are free.
/// The first improving deviation found is reported; `nash` is a proof unless
/// some player's search hit the cap, which downgrades a clean sweep to
/// `inconclusive`.
NashVerdict certify_nash(const CompilationGame& g, const Embedding& profile);

/// init_profile + run_dynamics; Infeasible result when initialization fails.
DynamicsResult solve_compilation_game(const CompilationGame& g);

}  // namespace aqc

#endif  // AQC_COMPILE_GAME_HPP_INCLUDED
