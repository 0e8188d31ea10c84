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

#include "aqc/ising.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace aqc {

namespace {

std::string strip(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

// A factor is either a nonnegative integer coefficient or `x<i>`.
struct Factor {
  bool is_variable = false;
  long value = 0;  // variable index or coefficient
};

Factor parse_factor(const std::string& token, const std::string& term) {
  if (token.empty())
    throw std::invalid_argument("malformed term '" + term + "'");
  Factor f;
  std::string digits = token;
  if (token[0] == 'x') {
    f.is_variable = true;
    digits = token.substr(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("malformed term '" + term + "'");
  f.value = std::stol(digits);
  return f;
}

}  // namespace

QuadraticForm parse_quadratic(std::string_view text) {
  QuadraticForm qf;
  const std::string body(text);
  std::size_t pos = 0;
  bool saw_term = false;
  while (pos <= body.size()) {
    const std::size_t plus = body.find('+', pos);
    const std::string term =
        strip(body.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
    pos = plus == std::string::npos ? body.size() + 1 : plus + 1;
    if (term.empty()) {
      if (plus == std::string::npos && !saw_term) break;
      throw std::invalid_argument("empty term in quadratic form");
    }
    saw_term = true;

    std::vector<Factor> factors;
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      const std::size_t star = term.find('*', fpos);
      const std::string token =
          strip(term.substr(fpos, star == std::string::npos ? std::string::npos : star - fpos));
      factors.push_back(parse_factor(token, term));
      if (star == std::string::npos) break;
      fpos = star + 1;
    }

    long coefficient = 1;
    std::vector<int> vars;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].is_variable) {
        vars.push_back(static_cast<int>(factors[i].value));
      } else {
        if (i != 0)
          throw std::invalid_argument("malformed term '" + term +
                                      "': coefficient must lead the term");
        coefficient = factors[i].value;
      }
    }
    if (coefficient != 0 && coefficient != 1)
      throw std::invalid_argument("coefficient " + std::to_string(coefficient) +
                                  " not in {0,1} in term '" + term + "'");
    if (vars.empty() || vars.size() > 2)
      throw std::invalid_argument("malformed term '" + term + "'");
    if (vars.size() == 2 && vars[0] == vars[1])
      throw std::invalid_argument("quadratic term '" + term +
                                  "' repeats variable x" + std::to_string(vars[0]));

    for (int v : vars) qf.num_vars = std::max(qf.num_vars, v + 1);
    if (coefficient == 1) {
      if (vars.size() == 1)
        qf.linear.insert(vars[0]);
      else
        qf.quadratic.emplace(std::min(vars[0], vars[1]), std::max(vars[0], vars[1]));
    }
  }
  if (!saw_term) throw std::invalid_argument("quadratic form has no terms");
  return qf;
}

ProgramGraph to_program_graph(const QuadraticForm& qf) {
  for (int v : qf.linear)
    if (v < 0 || v >= qf.num_vars)
      throw std::invalid_argument("linear variable index out of range");
  for (const auto& [u, v] : qf.quadratic)
    if (u < 0 || v < 0 || u >= qf.num_vars || v >= qf.num_vars || u == v)
      throw std::invalid_argument("quadratic pair out of range or degenerate");

  std::set<int> active = qf.linear;
  for (const auto& [u, v] : qf.quadratic) {
    active.insert(u);
    active.insert(v);
  }
  if (active.empty()) throw std::invalid_argument("empty program graph");

  std::vector<int> labels(active.begin(), active.end());
  std::vector<int> dense(qf.num_vars, -1);
  for (std::size_t i = 0; i < labels.size(); ++i) dense[labels[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(qf.quadratic.size());
  for (const auto& [u, v] : qf.quadratic) edges.emplace_back(dense[u], dense[v]);
  return ProgramGraph{Graph(static_cast<int>(labels.size()), edges), std::move(labels)};
}

QuadraticForm quadratic_from_program_graph(const Graph& g) {
  QuadraticForm qf;
  qf.num_vars = g.num_vertices();
  for (const auto& [u, v] : g.edges()) qf.quadratic.emplace(u, v);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.neighbors(v).empty()) qf.linear.insert(v);
  return qf;
}

}  // namespace aqc
