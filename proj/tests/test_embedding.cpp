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

#include <numeric>
#include <stdexcept>

#include "aqc/embedding.hpp"
#include "aqc/graph.hpp"
#include "aqc/random.hpp"
#include "oracles.hpp"

using namespace aqc;

namespace {

Embedding make_embedding(std::vector<std::vector<int>> chains, double alpha = 1.0) {
  Embedding e;
  e.alpha = alpha;
  e.chains = std::move(chains);
  return e;
}

}  // namespace

TEST_CASE("verify_ideal") {
  const Graph c6 = make_cycle(6);
  SUBCASE("identity map on matching graphs") {
    std::vector<int> identity(6);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(verify_ideal(identity, c6, c6).ok);
  }
  SUBCASE("triangle cannot map onto consecutive cycle vertices") {
    const VerifyReport report = verify_ideal({0, 1, 2}, make_complete(3), c6);
    CHECK_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0] == Violation{ViolationKind::MissingEdge, 0, 2});
  }
  SUBCASE("single edge onto an edge") {
    CHECK(verify_ideal({0, 1}, make_complete(2), c6).ok);
  }
  SUBCASE("non-injective map is an overlap") {
    const VerifyReport report = verify_ideal({0, 0}, make_complete(2), c6);
    CHECK_FALSE(report.ok);
    CHECK(report.violations.front().kind == ViolationKind::Overlap);
  }
  SUBCASE("image out of range") {
    const VerifyReport report = verify_ideal({0, 9}, make_complete(2), c6);
    CHECK_FALSE(report.ok);
    CHECK(report.violations.front().kind == ViolationKind::OutOfRange);
  }
}

TEST_CASE("verify_minor on the K3 into cycle(6) fixtures") {
  const Graph k3 = make_complete(3);
  const Graph c6 = make_cycle(6);
  SUBCASE("valid embedding with one long chain") {
    // program edges witnessed by hardware edges 0-1, 1-2, 5-0
    CHECK(verify_minor(make_embedding({{0}, {1}, {2, 3, 4, 5}}), k3, c6).ok);
  }
  SUBCASE("chain {2,3,5} is disconnected") {
    const VerifyReport report = verify_minor(make_embedding({{0}, {1}, {2, 3, 5}}), k3, c6);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations)
      found = found || v == Violation{ViolationKind::DisconnectedChain, 2, -1};
    CHECK(found);
  }
  SUBCASE("shared hardware vertex is an overlap") {
    const VerifyReport report =
        verify_minor(make_embedding({{0}, {0, 1}, {2, 3, 4}}), k3, c6);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations)
      found = found || v == Violation{ViolationKind::Overlap, 0, 1};
    CHECK(found);
  }
  SUBCASE("empty chain") {
    const VerifyReport report = verify_minor(make_embedding({{0}, {}, {2}}), k3, c6);
    CHECK_FALSE(report.ok);
    CHECK(report.violations.front() == Violation{ViolationKind::EmptyChain, 1, -1});
  }
  SUBCASE("chain shape must match the program graph") {
    CHECK_THROWS_AS(verify_minor(make_embedding({{0}, {1}}), k3, c6),
                    std::invalid_argument);
  }
}

TEST_CASE("search_ideal") {
  SUBCASE("edge into the six-cycle") {
    const IdealSearchResult r = search_ideal(make_complete(2), make_cycle(6));
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(verify_ideal(r.mapping, make_complete(2), make_cycle(6)).ok);
  }
  SUBCASE("no triangle subgraph in the six-cycle") {
    CHECK(search_ideal(make_complete(3), make_cycle(6)).outcome == SearchOutcome::Refuted);
  }
  SUBCASE("four-cycle inside one chimera cell") {
    const IdealSearchResult r = search_ideal(make_cycle(4), make_chimera(1));
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(verify_ideal(r.mapping, make_cycle(4), make_chimera(1)).ok);
  }
  SUBCASE("budget exhaustion is a distinct outcome") {
    const IdealSearchResult r = search_ideal(make_complete(3), make_cycle(6), 2);
    CHECK(r.outcome == SearchOutcome::BudgetExceeded);
    CHECK_THROWS_AS(search_ideal(make_complete(2), make_cycle(6), 0), std::invalid_argument);
  }
  SUBCASE("agrees with the exhaustive injection oracle") {
    std::mt19937_64 rng = seeded_rng(17);
    for (int round = 0; round < 120; ++round) {
      const int np = 2 + static_cast<int>(uniform_below(rng, 3));   // 2..4
      const int nh = np + static_cast<int>(uniform_below(rng, 5));  // np..np+4, <= 8
      const Graph gp = make_random(np, 0.6, rng());
      const Graph gh = make_random(nh, 0.5, rng());
      const IdealSearchResult r = search_ideal(gp, gh);
      REQUIRE(r.outcome != SearchOutcome::BudgetExceeded);
      if (r.outcome == SearchOutcome::Found) {
        CHECK(verify_ideal(r.mapping, gp, gh).ok);
        CHECK(test::oracle_ideal_exists(gp, gh));
      } else {
        CHECK_FALSE(test::oracle_ideal_exists(gp, gh));
      }
    }
  }
}

TEST_CASE("brute_force_min_embedding") {
  SUBCASE("K3 into cycle(6) costs 3") {
    const auto result = brute_force_min_embedding(make_complete(3), make_cycle(6), 1.0);
    REQUIRE(result.has_value());
    CHECK(result->total_cost == doctest::Approx(3.0));
    CHECK(verify_minor(result->embedding, make_complete(3), make_cycle(6)).ok);
  }
  SUBCASE("K2 into K2 is free") {
    const auto result = brute_force_min_embedding(make_complete(2), make_complete(2), 1.0);
    REQUIRE(result.has_value());
    CHECK(result->total_cost == doctest::Approx(0.0));
    CHECK(result->embedding.chains == std::vector<std::vector<int>>{{0}, {1}});
  }
  SUBCASE("a tree has no triangle minor") {
    CHECK_FALSE(brute_force_min_embedding(make_complete(3), make_path(3), 1.0).has_value());
  }
  SUBCASE("size preconditions") {
    CHECK_THROWS_AS(brute_force_min_embedding(make_complete(5), make_cycle(6), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_min_embedding(make_complete(3), make_cycle(12), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_min_embedding(make_complete(3), make_cycle(6), 0.0),
                    std::invalid_argument);
  }
  SUBCASE("cost identity and validity across fixtures") {
    const std::vector<std::pair<Graph, Graph>> fixtures = {
        {make_complete(3), make_cycle(6)},  {make_complete(4), make_chimera(1)},
        {make_cycle(4), make_chimera(1)},   {make_path(3), make_path(3)},
        {make_complete(3), make_complete(4)}, {make_path(4), make_cycle(6)},
        {make_complete(3), make_cycle(4)},
    };
    for (const auto& [gp, gh] : fixtures) {
      const auto result = brute_force_min_embedding(gp, gh, 2.0);
      REQUIRE(result.has_value());
      CHECK(verify_minor(result->embedding, gp, gh).ok);
      int total = 0;
      for (const auto& chain : result->embedding.chains)
        total += static_cast<int>(chain.size());
      CHECK(result->total_cost ==
            doctest::Approx(2.0 * (total - gp.num_vertices())));
      CHECK(test::oracle_embedding_valid(result->embedding, gp, gh));
    }
  }
}

TEST_CASE("single-vertex mutations never slip past verify_minor") {
  // Drop one chain vertex at random; the report must agree with the
  // independent union-find validator every time.
  const std::vector<std::pair<Graph, Graph>> fixtures = {
      {make_complete(3), make_cycle(6)},
      {make_complete(4), make_chimera(1)},
      {make_cycle(4), make_cycle(8)},
  };
  std::mt19937_64 rng = seeded_rng(23);
  int mutations = 0;
  for (const auto& [gp, gh] : fixtures) {
    const auto base = brute_force_min_embedding(gp, gh, 1.0);
    REQUIRE(base.has_value());
    REQUIRE(verify_minor(base->embedding, gp, gh).ok);
    for (int round = 0; round < 80; ++round) {
      Embedding mutant = base->embedding;
      auto& chain = mutant.chains[uniform_below(rng, mutant.chains.size())];
      chain.erase(chain.begin() + static_cast<long>(uniform_below(rng, chain.size())));
      const bool reported_ok = verify_minor(mutant, gp, gh).ok;
      CHECK(reported_ok == test::oracle_embedding_valid(mutant, gp, gh));
      ++mutations;
    }
  }
  CHECK(mutations == 240);
}
