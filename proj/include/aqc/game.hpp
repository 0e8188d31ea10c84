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

#ifndef AQC_GAME_HPP_INCLUDED
#define AQC_GAME_HPP_INCLUDED

#include <functional>
#include <vector>

namespace aqc {

/// Pure strategy profile: one strategy index per player.
using Play = std::vector<int>;

/// Per-player probability vectors over the strategy sets. Entries are
/// nonnegative and each vector sums to 1 within 1e-12.
using MixedProfile = std::vector<std::vector<double>>;

/// Finite normal-form game with payoffs stored densely: plays are indexed
/// row-major over the strategy counts, with one payoff per player per play.
/// Preferences are represented purely through these real payoffs.
class FiniteGame {
 public:
  /// `payoffs[play_index * N + player]`; size must be total_plays * N.
  FiniteGame(std::vector<int> strategy_counts, std::vector<double> payoffs);

  static FiniteGame from_function(
      std::vector<int> strategy_counts,
      const std::function<double(int player, const Play&)>& payoff);

  int num_players() const noexcept { return static_cast<int>(counts_.size()); }
  const std::vector<int>& strategy_counts() const noexcept { return counts_; }
  long total_plays() const noexcept { return total_plays_; }

  double payoff(int player, const Play& play) const;
  long encode_play(const Play& play) const;
  Play decode_play(long index) const;

 private:
  std::vector<int> counts_;
  std::vector<double> payoffs_;
  long total_plays_ = 1;
};

/// Largest play space accepted by the exhaustive enumerations below.
inline constexpr long kMaxEnumeratedPlays = 1'000'000;

/// Argmax strategies for player i against the opponents' components of p.
/// Nonempty; ties kept.
std::vector<int> best_replies(const FiniteGame& g, const Play& p, int player);

/// Best-reply countering: p_prime counters p iff every component of p_prime
/// is a best reply to p. A self-countering play is a Nash equilibrium.
bool counters(const FiniteGame& g, const Play& p_prime, const Play& p);

/// The countering set C_p, materialized as the Cartesian product of the
/// per-player best-reply sets, in lexicographic order.
std::vector<Play> counter_set(const FiniteGame& g, const Play& p);

/// All self-countering (pure Nash) plays, lexicographic.
std::vector<Play> enumerate_pure_nash(const FiniteGame& g);

/// Multilinear expected payoff of the mixed profile for one player.
double expected_payoff(const FiniteGame& g, const MixedProfile& profile, int player);

/// All mixed equilibria of a 2-player game (strategy counts <= 5) found by
/// equal-size support enumeration: solve each support's indifference system,
/// keep solutions that are nonnegative and admit no profitable pure deviation
/// beyond 1e-9, deduplicate within 1e-9. Singular supports are skipped.
std::vector<MixedProfile> support_enumeration_2p(const FiniteGame& g);

}  // namespace aqc

#endif  // AQC_GAME_HPP_INCLUDED
