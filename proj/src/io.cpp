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

#include "aqc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aqc {

namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw std::runtime_error("edge list: " + message);
}

std::vector<std::string> tokenize_data(const std::string& line) {
  const std::size_t comment = line.find('#');
  std::istringstream stream(comment == std::string::npos ? line : line.substr(0, comment));
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

int parse_int(const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    parse_error("expected an integer, got '" + token + "'");
  }
  if (used != token.size()) parse_error("expected an integer, got '" + token + "'");
  return value;
}

std::vector<int> int_vector(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw std::runtime_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& item : j) {
    if (!item.is_number_integer())
      throw std::runtime_error(std::string(what) + " must contain integers");
    out.push_back(item.get<int>());
  }
  return out;
}

// Recursive descent over the nested payoff array: depth d indexes player d's
// strategy; the innermost array is the per-player payoff vector.
void read_payoffs(const nlohmann::json& node, const std::vector<int>& counts,
                  std::size_t depth, std::vector<int>& play,
                  std::vector<double>& flat) {
  const int players = static_cast<int>(counts.size());
  if (depth == counts.size()) {
    if (!node.is_array() || static_cast<int>(node.size()) != players)
      throw std::runtime_error("game payoffs: innermost arrays must hold one value per player");
    long index = 0;
    for (int i = 0; i < players; ++i) index = index * counts[i] + play[i];
    for (int i = 0; i < players; ++i) {
      if (!node[i].is_number())
        throw std::runtime_error("game payoffs: expected a number");
      flat[index * players + i] = node[i].get<double>();
    }
    return;
  }
  if (!node.is_array() || static_cast<int>(node.size()) != counts[depth])
    throw std::runtime_error("game payoffs: array shape does not match the strategy counts");
  for (int s = 0; s < counts[depth]; ++s) {
    play[depth] = s;
    read_payoffs(node[s], counts, depth + 1, play, flat);
  }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  bool have_count = false;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    const std::vector<std::string> tokens = tokenize_data(line);
    if (tokens.empty()) continue;
    if (!have_count) {
      if (tokens.size() != 1) parse_error("first data line must hold the vertex count");
      n = parse_int(tokens[0]);
      have_count = true;
      continue;
    }
    if (tokens.size() != 2) parse_error("expected one 'u v' pair per line");
    edges.emplace_back(parse_int(tokens[0]), parse_int(tokens[1]));
  }
  if (!have_count) parse_error("missing vertex count");
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    parse_error(e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.neighbors(v).empty()) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json embedding_to_json(const Embedding& e) {
  nlohmann::json chains = nlohmann::json::object();
  for (int v = 0; v < e.num_program_vertices(); ++v)
    chains[std::to_string(v)] = e.chains[v];
  return nlohmann::json{{"alpha", e.alpha}, {"chains", chains}};
}

Embedding embedding_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("chains") || !j["chains"].is_object())
    throw std::runtime_error("embedding JSON: missing 'chains' object");
  Embedding e;
  e.alpha = j.value("alpha", 1.0);
  const auto& chains = j["chains"];
  e.chains.resize(chains.size());
  for (const auto& [key, value] : chains.items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::runtime_error("embedding JSON: chain key '" + key +
                               "' is not a program vertex");
    }
    if (v < 0 || v >= static_cast<int>(chains.size()))
      throw std::runtime_error("embedding JSON: chain keys must be exactly 0..n-1");
    e.chains[v] = int_vector(value, "embedding JSON chain");
    std::sort(e.chains[v].begin(), e.chains[v].end());
  }
  return e;
}

nlohmann::json verify_report_to_json(const VerifyReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& violation : report.violations) {
    nlohmann::json subject = nlohmann::json::array();
    subject.push_back(violation.a);
    if (violation.b >= 0) subject.push_back(violation.b);
    violations.push_back(
        {{"kind", violation_kind_name(violation.kind)}, {"subject", subject}});
  }
  return nlohmann::json{{"ok", report.ok}, {"violations", violations}};
}

std::string violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptyChain: return "empty-chain";
    case ViolationKind::DisconnectedChain: return "disconnected-chain";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::MissingEdge: return "missing-edge";
    case ViolationKind::OutOfRange: return "out-of-range";
  }
  return "unknown";
}

std::string dynamics_status_name(DynamicsStatus status) {
  switch (status) {
    case DynamicsStatus::NashCertified: return "nash_certified";
    case DynamicsStatus::ConvergedUncertified: return "converged_uncertified";
    case DynamicsStatus::MaxPasses: return "max_passes";
    case DynamicsStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

nlohmann::json dynamics_result_to_json(const DynamicsResult& result) {
  nlohmann::json chains = nlohmann::json::object();
  for (int v = 0; v < result.profile.num_program_vertices(); ++v)
    chains[std::to_string(v)] = result.profile.chains[v];
  return nlohmann::json{{"status", dynamics_status_name(result.status)},
                        {"passes", result.passes},
                        {"total_cost", result.total_cost},
                        {"chains", chains},
                        {"trace", result.trace}};
}

FiniteGame game_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("players") || !j.contains("counts") ||
      !j.contains("payoffs"))
    throw std::runtime_error("game JSON: need 'players', 'counts', and 'payoffs'");
  if (!j["players"].is_number_integer())
    throw std::runtime_error("game JSON: 'players' must be an integer");
  const int players = j["players"].get<int>();
  const std::vector<int> counts = int_vector(j["counts"], "game JSON counts");
  if (players < 1 || static_cast<int>(counts.size()) != players)
    throw std::runtime_error("game JSON: 'counts' must list one strategy count per player");
  long total = 1;
  for (int c : counts) {
    if (c < 1) throw std::runtime_error("game JSON: strategy counts must be >= 1");
    total *= c;
  }
  std::vector<double> flat(total * players, 0.0);
  std::vector<int> play(players, 0);
  read_payoffs(j["payoffs"], counts, 0, play, flat);
  return FiniteGame(counts, std::move(flat));
}

QuadraticForm quadratic_form_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw std::runtime_error("quadratic form JSON: missing 'n'");
  if (!j["n"].is_number_integer())
    throw std::runtime_error("quadratic form JSON: 'n' must be an integer");
  QuadraticForm qf;
  qf.num_vars = j["n"].get<int>();
  if (qf.num_vars < 0) throw std::runtime_error("quadratic form JSON: 'n' must be >= 0");
  if (j.contains("linear"))
    for (int v : int_vector(j["linear"], "quadratic form linear")) {
      if (v < 0 || v >= qf.num_vars)
        throw std::runtime_error("quadratic form JSON: linear index out of range");
      qf.linear.insert(v);
    }
  if (j.contains("quadratic")) {
    if (!j["quadratic"].is_array())
      throw std::runtime_error("quadratic form JSON: 'quadratic' must be an array");
    for (const auto& pair : j["quadratic"]) {
      const std::vector<int> uv = int_vector(pair, "quadratic form pair");
      if (uv.size() != 2)
        throw std::runtime_error("quadratic form JSON: pairs must have two indices");
      const auto [u, v] = std::minmax(uv[0], uv[1]);
      if (u < 0 || v >= qf.num_vars || u == v)
        throw std::runtime_error("quadratic form JSON: pair out of range or degenerate");
      qf.quadratic.emplace(u, v);
    }
  }
  return qf;
}

}  // namespace aqc
