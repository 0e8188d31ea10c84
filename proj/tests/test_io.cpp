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

#include <sstream>

#include "aqc/io.hpp"
#include "aqc/random.hpp"

using namespace aqc;

TEST_CASE("edge list round trip with comments") {
  std::istringstream in(
      "# hardware fixture\n"
      "6\n"
      "0 1  # first arc\n"
      "1 2\n"
      "\n"
      "2 3\n"
      "3 4\n"
      "4 5\n"
      "5 0\n");
  const Graph g = read_edge_list(in);
  CHECK(g == make_cycle(6));

  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == g);
}

TEST_CASE("edge list rejects malformed input") {
  const auto expect_fail = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_edge_list(in), std::runtime_error);
  };
  expect_fail("");
  expect_fail("3\n0\n");
  expect_fail("3\n0 1 2\n");
  expect_fail("3\n0 x\n");
  expect_fail("2\n0 2\n");   // out of range
  expect_fail("2\n1 1\n");   // self loop
}

TEST_CASE("dot output lists edges ascending and keeps isolated vertices") {
  const Graph g(4, {{2, 1}, {0, 1}});
  CHECK(to_dot(g) ==
        "graph G {\n"
        "  3;\n"
        "  0 -- 1;\n"
        "  1 -- 2;\n"
        "}\n");
}

TEST_CASE("embedding JSON round trip") {
  Embedding e;
  e.alpha = 2.0;
  e.chains = {{0, 1}, {2}, {3, 4, 5}};
  const nlohmann::json j = embedding_to_json(e);
  CHECK(j["alpha"] == 2.0);
  CHECK(j["chains"]["2"] == nlohmann::json::array({3, 4, 5}));
  const Embedding back = embedding_from_json(j);
  CHECK(back.alpha == e.alpha);
  CHECK(back.chains == e.chains);

  SUBCASE("chain keys must cover 0..n-1") {
    nlohmann::json bad = j;
    bad["chains"].erase("1");
    CHECK_THROWS_AS(embedding_from_json(bad), std::runtime_error);
  }
}

TEST_CASE("verify report JSON") {
  VerifyReport report;
  report.ok = false;
  report.violations = {{ViolationKind::MissingEdge, 0, 2},
                       {ViolationKind::EmptyChain, 1, -1}};
  const nlohmann::json j = verify_report_to_json(report);
  CHECK(j["ok"] == false);
  CHECK(j["violations"][0]["kind"] == "missing-edge");
  CHECK(j["violations"][0]["subject"] == nlohmann::json::array({0, 2}));
  CHECK(j["violations"][1]["kind"] == "empty-chain");
  CHECK(j["violations"][1]["subject"] == nlohmann::json::array({1}));
}

TEST_CASE("game JSON") {
  const nlohmann::json j = {
      {"players", 2},
      {"counts", {2, 2}},
      {"payoffs",
       {{{3, 3}, {0, 5}},   // row 0: (C,C) (C,D)
        {{5, 0}, {1, 1}}}}  // row 1: (D,C) (D,D)
  };
  const FiniteGame g = game_from_json(j);
  CHECK(g.num_players() == 2);
  CHECK(g.payoff(0, {0, 0}) == 3.0);
  CHECK(g.payoff(1, {0, 1}) == 5.0);
  CHECK(g.payoff(0, {1, 0}) == 5.0);
  CHECK(enumerate_pure_nash(g) == std::vector<Play>{{1, 1}});

  SUBCASE("shape mismatches are rejected") {
    nlohmann::json bad = j;
    bad["counts"] = {2, 3};
    CHECK_THROWS_AS(game_from_json(bad), std::runtime_error);
    bad = j;
    bad["payoffs"][0][0] = {1};
    CHECK_THROWS_AS(game_from_json(bad), std::runtime_error);
  }
}

TEST_CASE("quadratic form JSON") {
  const nlohmann::json j = {{"n", 4}, {"linear", {0}}, {"quadratic", {{1, 2}, {2, 3}}}};
  const QuadraticForm qf = quadratic_form_from_json(j);
  CHECK(qf.num_vars == 4);
  CHECK(qf.linear == std::set<int>{0});
  CHECK(qf.quadratic == std::set<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(quadratic_form_from_json({{"n", 2}, {"quadratic", {{0, 5}}}}),
                  std::runtime_error);
  CHECK_THROWS_AS(quadratic_form_from_json({{"n", 2}, {"quadratic", {{1, 1}}}}),
                  std::runtime_error);
}

TEST_CASE("dynamics result JSON carries the documented keys") {
  DynamicsResult r;
  r.status = DynamicsStatus::NashCertified;
  r.passes = 2;
  r.total_cost = 3.0;
  r.profile.chains = {{0, 1}, {2, 3}, {4, 5}};
  r.trace = {4.0, 3.0, 3.0};
  const nlohmann::json j = dynamics_result_to_json(r);
  CHECK(j["status"] == "nash_certified");
  CHECK(j["passes"] == 2);
  CHECK(j["total_cost"] == 3.0);
  CHECK(j["trace"] == nlohmann::json::array({4.0, 3.0, 3.0}));
  CHECK(j["chains"]["0"] == nlohmann::json::array({0, 1}));
}
