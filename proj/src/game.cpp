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

#include "aqc/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace aqc {

namespace {

constexpr double kEquilibriumTolerance = 1e-9;
constexpr double kProfileSumTolerance = 1e-12;
constexpr double kSingularPivot = 1e-12;

void check_play(const FiniteGame& g, const Play& p) {
  if (static_cast<int>(p.size()) != g.num_players())
    throw std::invalid_argument("play has the wrong number of players");
  for (int i = 0; i < g.num_players(); ++i)
    if (p[i] < 0 || p[i] >= g.strategy_counts()[i])
      throw std::invalid_argument("strategy index out of range for player " +
                                  std::to_string(i));
}

void check_profile(const FiniteGame& g, const MixedProfile& m) {
  if (static_cast<int>(m.size()) != g.num_players())
    throw std::invalid_argument("mixed profile has the wrong number of players");
  for (int i = 0; i < g.num_players(); ++i) {
    if (static_cast<int>(m[i].size()) != g.strategy_counts()[i])
      throw std::invalid_argument("mixed profile vector has the wrong length");
    double sum = 0.0;
    for (double x : m[i]) {
      if (x < 0.0) throw std::invalid_argument("mixed profile entry is negative");
      sum += x;
    }
    if (std::abs(sum - 1.0) > kProfileSumTolerance)
      throw std::invalid_argument("mixed profile vector does not sum to 1");
  }
}

void check_enumerable(const FiniteGame& g) {
  if (g.total_plays() > kMaxEnumeratedPlays)
    throw std::invalid_argument("play space exceeds the enumeration cap");
}

// Solve a dense square system in place by Gaussian elimination with partial
// pivoting; nullopt when a pivot falls below the singularity threshold.
std::optional<std::vector<double>> solve_linear(std::vector<std::vector<double>> m,
                                                std::vector<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    if (std::abs(m[pivot][col]) < kSingularPivot) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const double factor = m[row][col] / m[col][col];
      for (int k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// All k-element subsets of {0..count-1}, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int count, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  const std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (int v = start; v <= count - (k - depth); ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

FiniteGame::FiniteGame(std::vector<int> strategy_counts, std::vector<double> payoffs)
    : counts_(std::move(strategy_counts)), payoffs_(std::move(payoffs)) {
  if (counts_.empty()) throw std::invalid_argument("game needs at least one player");
  for (int c : counts_) {
    if (c < 1) throw std::invalid_argument("every player needs at least one strategy");
    if (total_plays_ > (1L << 40) / c)
      throw std::invalid_argument("play space too large to materialize");
    total_plays_ *= c;
  }
  if (static_cast<long>(payoffs_.size()) != total_plays_ * num_players())
    throw std::invalid_argument("payoff table has the wrong size");
}

FiniteGame FiniteGame::from_function(
    std::vector<int> strategy_counts,
    const std::function<double(int player, const Play&)>& payoff) {
  long total = 1;
  for (int c : strategy_counts) {
    if (c < 1) throw std::invalid_argument("every player needs at least one strategy");
    total *= c;
  }
  FiniteGame g(strategy_counts,
               std::vector<double>(total * static_cast<long>(strategy_counts.size()), 0.0));
  for (long idx = 0; idx < g.total_plays_; ++idx) {
    const Play play = g.decode_play(idx);
    for (int i = 0; i < g.num_players(); ++i)
      g.payoffs_[idx * g.num_players() + i] = payoff(i, play);
  }
  return g;
}

double FiniteGame::payoff(int player, const Play& play) const {
  if (player < 0 || player >= num_players())
    throw std::invalid_argument("player index out of range");
  return payoffs_[encode_play(play) * num_players() + player];
}

long FiniteGame::encode_play(const Play& play) const {
  check_play(*this, play);
  long index = 0;
  for (int i = 0; i < num_players(); ++i) index = index * counts_[i] + play[i];
  return index;
}

Play FiniteGame::decode_play(long index) const {
  Play play(num_players());
  for (int i = num_players() - 1; i >= 0; --i) {
    play[i] = static_cast<int>(index % counts_[i]);
    index /= counts_[i];
  }
  return play;
}

std::vector<int> best_replies(const FiniteGame& g, const Play& p, int player) {
  check_play(g, p);
  Play probe = p;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> argmax;
  for (int r = 0; r < g.strategy_counts()[player]; ++r) {
    probe[player] = r;
    const double value = g.payoff(player, probe);
    if (value > best) {
      best = value;
      argmax.assign(1, r);
    } else if (value == best) {
      argmax.push_back(r);
    }
  }
  return argmax;
}

bool counters(const FiniteGame& g, const Play& p_prime, const Play& p) {
  check_play(g, p_prime);
  for (int i = 0; i < g.num_players(); ++i) {
    const std::vector<int> replies = best_replies(g, p, i);
    if (!std::binary_search(replies.begin(), replies.end(), p_prime[i])) return false;
  }
  return true;
}

std::vector<Play> counter_set(const FiniteGame& g, const Play& p) {
  check_enumerable(g);
  std::vector<std::vector<int>> replies(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) replies[i] = best_replies(g, p, i);
  std::vector<Play> product;
  Play current(g.num_players());
  const std::function<void(int)> expand = [&](int player) {
    if (player == g.num_players()) {
      product.push_back(current);
      return;
    }
    for (int r : replies[player]) {
      current[player] = r;
      expand(player + 1);
    }
  };
  expand(0);
  return product;
}

std::vector<Play> enumerate_pure_nash(const FiniteGame& g) {
  check_enumerable(g);
  std::vector<Play> equilibria;
  for (long idx = 0; idx < g.total_plays(); ++idx) {
    const Play play = g.decode_play(idx);
    bool self_countering = true;
    for (int i = 0; i < g.num_players() && self_countering; ++i) {
      const std::vector<int> replies = best_replies(g, play, i);
      self_countering = std::binary_search(replies.begin(), replies.end(), play[i]);
    }
    if (self_countering) equilibria.push_back(play);
  }
  return equilibria;
}

double expected_payoff(const FiniteGame& g, const MixedProfile& profile, int player) {
  check_profile(g, profile);
  if (player < 0 || player >= g.num_players())
    throw std::invalid_argument("player index out of range");
  double total = 0.0;
  for (long idx = 0; idx < g.total_plays(); ++idx) {
    const Play play = g.decode_play(idx);
    double weight = 1.0;
    for (int i = 0; i < g.num_players(); ++i) weight *= profile[i][play[i]];
    if (weight != 0.0) total += weight * g.payoff(player, play);
  }
  return total;
}

std::vector<MixedProfile> support_enumeration_2p(const FiniteGame& g) {
  if (g.num_players() != 2)
    throw std::invalid_argument("support enumeration handles exactly 2 players");
  const int rows = g.strategy_counts()[0];
  const int cols = g.strategy_counts()[1];
  if (rows > 5 || cols > 5)
    throw std::invalid_argument("support enumeration is capped at 5 strategies");

  std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
  std::vector<std::vector<double>> b(rows, std::vector<double>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      a[i][j] = g.payoff(0, {i, j});
      b[i][j] = g.payoff(1, {i, j});
    }

  std::vector<MixedProfile> found;
  const auto already_found = [&](const MixedProfile& candidate) {
    for (const auto& known : found) {
      double distance = 0.0;
      for (int i = 0; i < 2; ++i)
        for (std::size_t s = 0; s < known[i].size(); ++s)
          distance = std::max(distance, std::abs(known[i][s] - candidate[i][s]));
      if (distance <= kEquilibriumTolerance) return true;
    }
    return false;
  };

  for (int k = 1; k <= std::min(rows, cols); ++k) {
    for (const auto& row_support : subsets_of_size(rows, k)) {
      for (const auto& col_support : subsets_of_size(cols, k)) {
        // Column mix y (plus the row value v) making supported rows indifferent.
        std::vector<std::vector<double>> m(k + 1, std::vector<double>(k + 1, 0.0));
        std::vector<double> rhs(k + 1, 0.0);
        for (int r = 0; r < k; ++r) {
          for (int c = 0; c < k; ++c) m[r][c] = a[row_support[r]][col_support[c]];
          m[r][k] = -1.0;
        }
        for (int c = 0; c < k; ++c) m[k][c] = 1.0;
        rhs[k] = 1.0;
        const auto col_solution = solve_linear(m, rhs);
        if (!col_solution) continue;

        // Row mix x (plus the column value w) making supported columns indifferent.
        for (int c = 0; c < k; ++c) {
          for (int r = 0; r < k; ++r) m[c][r] = b[row_support[r]][col_support[c]];
          m[c][k] = -1.0;
        }
        for (int r = 0; r < k; ++r) m[k][r] = 1.0;
        for (int r = 0; r <= k; ++r) rhs[r] = r == k ? 1.0 : 0.0;
        const auto row_solution = solve_linear(m, rhs);
        if (!row_solution) continue;

        bool negative = false;
        for (int s = 0; s < k; ++s)
          negative = negative || (*row_solution)[s] < -kEquilibriumTolerance ||
                     (*col_solution)[s] < -kEquilibriumTolerance;
        if (negative) continue;

        MixedProfile candidate{std::vector<double>(rows, 0.0),
                               std::vector<double>(cols, 0.0)};
        double row_sum = 0.0;
        double col_sum = 0.0;
        for (int s = 0; s < k; ++s) {
          candidate[0][row_support[s]] = std::max(0.0, (*row_solution)[s]);
          candidate[1][col_support[s]] = std::max(0.0, (*col_solution)[s]);
          row_sum += candidate[0][row_support[s]];
          col_sum += candidate[1][col_support[s]];
        }
        for (double& x : candidate[0]) x /= row_sum;
        for (double& y : candidate[1]) y /= col_sum;

        // No pure deviation may beat the supported value for either player.
        const double row_value = (*col_solution)[k];
        const double col_value = (*row_solution)[k];
        bool improving = false;
        for (int i = 0; i < rows && !improving; ++i) {
          double value = 0.0;
          for (int j = 0; j < cols; ++j) value += a[i][j] * candidate[1][j];
          improving = value > row_value + kEquilibriumTolerance;
        }
        for (int j = 0; j < cols && !improving; ++j) {
          double value = 0.0;
          for (int i = 0; i < rows; ++i) value += b[i][j] * candidate[0][i];
          improving = value > col_value + kEquilibriumTolerance;
        }
        if (improving) continue;

        if (!already_found(candidate)) found.push_back(std::move(candidate));
      }
    }
  }
  return found;
}

}  // namespace aqc
