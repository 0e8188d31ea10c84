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

// aqcc: command-line compiler mapping program graphs onto quantum-annealer
// hardware graphs by minor embedding. Subcommands generate topologies, ingest
// quadratic forms, embed (game dynamics, probabilistic baseline, brute force,
// or ideal search), verify embeddings, solve normal-form games, and certify
// Nash equilibria. Exit codes: 0 success, 1 no embedding / failed check,
// 2 usage or input errors. Randomized paths require an explicit seed.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "aqc/cmr.hpp"
#include "aqc/compile_game.hpp"
#include "aqc/embedding.hpp"
#include "aqc/game.hpp"
#include "aqc/graph.hpp"
#include "aqc/io.hpp"
#include "aqc/ising.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot write '" + output_path + "'");
  out << content;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string graph_text(const aqc::Graph& g, const std::string& format) {
  if (format == "dot") return aqc::to_dot(g);
  std::ostringstream out;
  aqc::write_edge_list(out, g);
  return out.str();
}

std::string number_text(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::string summary_text(const std::string& status, int passes, double total_cost,
                         const std::vector<std::vector<int>>& chains) {
  std::size_t max_chain = 0;
  std::map<std::size_t, int> histogram;
  for (const auto& chain : chains) {
    max_chain = std::max(max_chain, chain.size());
    ++histogram[chain.size()];
  }
  std::ostringstream out;
  out << "status: " << status << "\n";
  out << "passes: " << passes << "\n";
  out << "total_cost: " << number_text(total_cost) << "\n";
  out << "max_chain: " << max_chain << "\n";
  out << "chain_lengths:";
  for (const auto& [length, count] : histogram) out << " " << length << ":" << count;
  out << "\n";
  return out.str();
}

aqc::StandardKind parse_kind(const std::string& kind) {
  if (kind == "cycle") return aqc::StandardKind::Cycle;
  if (kind == "complete") return aqc::StandardKind::Complete;
  if (kind == "path") return aqc::StandardKind::Path;
  if (kind == "grid") return aqc::StandardKind::Grid;
  if (kind == "random") return aqc::StandardKind::Random;
  throw UsageError("unknown graph kind '" + kind + "'");
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  return j;
}

// ---- gen -------------------------------------------------------------------

struct GenOptions {
  std::string kind;
  int n = 0;
  int m = 0;
  int rows = 0;
  int cols = 0;
  double p = 0.0;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string format = "edgelist";
};

int run_gen(const GenOptions& opt) {
  aqc::Graph g;
  if (opt.kind == "chimera") {
    g = aqc::make_chimera(opt.m);
  } else {
    const aqc::StandardKind kind = parse_kind(opt.kind);
    if (kind == aqc::StandardKind::Random && !opt.seed)
      throw UsageError("--kind random requires --seed");
    aqc::StandardParams params;
    params.n = opt.n;
    params.rows = opt.rows;
    params.cols = opt.cols;
    params.p = opt.p;
    params.seed = opt.seed;
    g = aqc::gen_standard(kind, params);
  }
  emit(graph_text(g, opt.format), opt.output);
  return kExitSuccess;
}

// ---- ingest ----------------------------------------------------------------

struct IngestOptions {
  std::string input;
  std::string output;
  std::string format = "edgelist";
};

int run_ingest(const IngestOptions& opt) {
  std::ifstream in(opt.input);
  if (!in) throw std::runtime_error("cannot open '" + opt.input + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const std::size_t first = text.find_first_not_of(" \t\r\n");
  aqc::QuadraticForm qf;
  if (first != std::string::npos && text[first] == '{')
    qf = aqc::quadratic_form_from_json(nlohmann::json::parse(text));
  else
    qf = aqc::parse_quadratic(text);
  const aqc::ProgramGraph pg = aqc::to_program_graph(qf);

  if (opt.format == "json") {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : pg.graph.edges()) edges.push_back({u, v});
    emit(dump_json({{"n", pg.graph.num_vertices()},
                    {"edges", edges},
                    {"labels", pg.vertex_labels}}),
         opt.output);
  } else if (opt.format == "dot") {
    emit(aqc::to_dot(pg.graph), opt.output);
  } else {
    std::ostringstream out;
    aqc::write_edge_list(out, pg.graph);
    for (std::size_t v = 0; v < pg.vertex_labels.size(); ++v)
      out << "# label " << v << " " << pg.vertex_labels[v] << "\n";
    emit(out.str(), opt.output);
  }
  return kExitSuccess;
}

// ---- embed -----------------------------------------------------------------

struct EmbedOptions {
  std::string program;
  std::string hardware;
  std::string algorithm;
  double alpha = 1.0;
  std::optional<std::uint64_t> seed;
  int tries = 50;
  int max_passes = 100;
  long budget = 10'000'000;
  std::string order = "ascending";
  std::string output;
  std::string format = "json";
  std::string stats_out;
};

int run_embed(const EmbedOptions& opt) {
  if (!(opt.alpha > 0.0)) throw UsageError("--alpha must be > 0");
  const aqc::Graph gp = aqc::read_edge_list_file(opt.program);
  const aqc::Graph gh = aqc::read_edge_list_file(opt.hardware);

  const bool randomized = opt.algorithm == "cmr" || opt.algorithm == "game";
  if (randomized && !opt.seed)
    throw UsageError("--alg " + opt.algorithm + " requires --seed");

  aqc::Embedding embedding;
  nlohmann::json artifact;
  std::string status = "ok";
  int passes = 0;
  double total_cost = 0.0;

  if (opt.algorithm == "cmr") {
    if (opt.tries < 1) throw UsageError("--tries must be >= 1");
    if (!opt.stats_out.empty()) {
      const aqc::CmrStats stats = aqc::cmr_embed_stats(gp, gh, *opt.seed, opt.tries);
      emit(dump_json({{"tries", stats.tries},
                      {"successes", stats.successes},
                      {"first_success", stats.first_success}}),
           opt.stats_out);
    }
    const auto found = aqc::cmr_embed(gp, gh, *opt.seed, opt.tries);
    if (!found) throw NotFound("no embedding found");
    embedding = *found;
    embedding.alpha = opt.alpha;
    for (const auto& chain : embedding.chains)
      total_cost += opt.alpha * static_cast<double>(chain.size() - 1);
    artifact = aqc::embedding_to_json(embedding);
  } else if (opt.algorithm == "brute") {
    const auto found = aqc::brute_force_min_embedding(gp, gh, opt.alpha);
    if (!found) throw NotFound("no embedding found");
    embedding = found->embedding;
    total_cost = found->total_cost;
    artifact = aqc::embedding_to_json(embedding);
    artifact["total_cost"] = found->total_cost;
  } else if (opt.algorithm == "ideal") {
    const aqc::IdealSearchResult result = aqc::search_ideal(gp, gh, opt.budget);
    if (result.outcome == aqc::SearchOutcome::BudgetExceeded)
      throw NotFound("search budget exceeded");
    if (result.outcome == aqc::SearchOutcome::Refuted)
      throw NotFound("no ideal compilation found");
    embedding.alpha = opt.alpha;
    for (int v : result.mapping) embedding.chains.push_back({v});
    artifact = aqc::embedding_to_json(embedding);
  } else if (opt.algorithm == "game") {
    aqc::DynamicsConfig config;
    config.max_passes = opt.max_passes;
    config.seed = *opt.seed;
    config.init_tries = opt.tries;
    if (opt.order == "shuffle")
      config.order = aqc::DynamicsConfig::PlayerOrder::Shuffled;
    else if (opt.order != "ascending")
      throw UsageError("--order must be 'ascending' or 'shuffle'");
    const aqc::CompilationGame game =
        aqc::make_compilation_game(gp, gh, opt.alpha, std::nullopt, config);
    const aqc::DynamicsResult result = aqc::solve_compilation_game(game);
    if (result.status == aqc::DynamicsStatus::Infeasible)
      throw NotFound("no embedding found");
    embedding = result.profile;
    status = aqc::dynamics_status_name(result.status);
    passes = result.passes;
    total_cost = result.total_cost;
    artifact = aqc::dynamics_result_to_json(result);
  } else {
    throw UsageError("unknown algorithm '" + opt.algorithm + "'");
  }

  // Never emit an unverified embedding; a failure here is an internal error.
  if (!aqc::verify_minor(embedding, gp, gh).ok)
    throw std::runtime_error("internal error: produced embedding fails verification");

  if (opt.format == "summary")
    emit(summary_text(status, passes, total_cost, embedding.chains), opt.output);
  else if (opt.format == "json")
    emit(dump_json(artifact), opt.output);
  else
    throw UsageError("--format must be 'json' or 'summary' for embed");
  return kExitSuccess;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string program;
  std::string hardware;
  std::string embedding;
  std::string mode = "minor";
  std::string output;
};

int run_verify(const VerifyOptions& opt) {
  const aqc::Graph gp = aqc::read_edge_list_file(opt.program);
  const aqc::Graph gh = aqc::read_edge_list_file(opt.hardware);
  const aqc::Embedding e = aqc::embedding_from_json(load_json_file(opt.embedding));

  aqc::VerifyReport report;
  if (opt.mode == "ideal") {
    std::vector<int> map;
    for (const auto& chain : e.chains) {
      if (chain.size() != 1)
        throw UsageError("ideal verification needs singleton chains");
      map.push_back(chain.front());
    }
    report = aqc::verify_ideal(map, gp, gh);
  } else if (opt.mode == "minor") {
    report = aqc::verify_minor(e, gp, gh);
  } else {
    throw UsageError("--mode must be 'minor' or 'ideal'");
  }
  emit(dump_json(aqc::verify_report_to_json(report)), opt.output);
  return report.ok ? kExitSuccess : kExitNotFound;
}

// ---- game solve -------------------------------------------------------------

struct GameSolveOptions {
  std::string input;
  std::string output;
};

int run_game_solve(const GameSolveOptions& opt) {
  const aqc::FiniteGame game = aqc::game_from_json(load_json_file(opt.input));
  nlohmann::json out;
  nlohmann::json pure = nlohmann::json::array();
  for (const aqc::Play& play : aqc::enumerate_pure_nash(game)) pure.push_back(play);
  out["pure"] = pure;
  if (game.num_players() == 2 && game.strategy_counts()[0] <= 5 &&
      game.strategy_counts()[1] <= 5) {
    nlohmann::json mixed = nlohmann::json::array();
    for (const aqc::MixedProfile& profile : aqc::support_enumeration_2p(game))
      mixed.push_back(profile);
    out["mixed"] = mixed;
  }
  emit(dump_json(out), opt.output);
  return kExitSuccess;
}

// ---- certify ----------------------------------------------------------------

struct CertifyOptions {
  std::string program;
  std::string hardware;
  std::string profile;
  double alpha = 1.0;
  std::string output;
};

int run_certify(const CertifyOptions& opt) {
  if (!(opt.alpha > 0.0)) throw UsageError("--alpha must be > 0");
  const aqc::Graph gp = aqc::read_edge_list_file(opt.program);
  const aqc::Graph gh = aqc::read_edge_list_file(opt.hardware);
  const aqc::Embedding profile = aqc::embedding_from_json(load_json_file(opt.profile));
  const aqc::CompilationGame game = aqc::make_compilation_game(gp, gh, opt.alpha);
  const aqc::NashVerdict verdict = aqc::certify_nash(game, profile);

  nlohmann::json out;
  switch (verdict.kind) {
    case aqc::NashVerdict::Kind::Nash:
      out["verdict"] = "nash";
      break;
    case aqc::NashVerdict::Kind::Improvable:
      out["verdict"] = "improvable";
      out["player"] = verdict.player;
      out["chain"] = verdict.improving_chain;
      break;
    case aqc::NashVerdict::Kind::Inconclusive:
      out["verdict"] = "inconclusive";
      break;
  }
  emit(dump_json(out), opt.output);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aqcc: minor-embedding compiler for adiabatic quantum programs"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a hardware/program topology");
  gen_cmd->add_option("--kind", gen.kind,
                      "cycle|complete|path|grid|random|chimera")->required();
  gen_cmd->add_option("--n", gen.n, "vertex count");
  gen_cmd->add_option("--m", gen.m, "chimera cells per side");
  gen_cmd->add_option("--rows", gen.rows, "grid rows");
  gen_cmd->add_option("--cols", gen.cols, "grid cols");
  gen_cmd->add_option("--p", gen.p, "random edge probability");
  gen_cmd->add_option("--seed", gen.seed, "seed for random generation");
  gen_cmd->add_option("-o,--output", gen.output, "output path (default stdout)");
  gen_cmd->add_option("--format", gen.format, "edgelist|dot")
      ->check(CLI::IsMember({"edgelist", "dot"}));

  IngestOptions ingest;
  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "quadratic form -> program graph");
  ingest_cmd->add_option("--input", ingest.input, "quadratic form (text or JSON)")
      ->required();
  ingest_cmd->add_option("-o,--output", ingest.output, "output path (default stdout)");
  ingest_cmd->add_option("--format", ingest.format, "edgelist|dot|json")
      ->check(CLI::IsMember({"edgelist", "dot", "json"}));

  EmbedOptions embed;
  CLI::App* embed_cmd = app.add_subcommand("embed", "embed a program graph");
  embed_cmd->add_option("--program", embed.program, "program graph edge list")->required();
  embed_cmd->add_option("--hardware", embed.hardware, "hardware graph edge list")
      ->required();
  embed_cmd->add_option("--alg", embed.algorithm, "game|cmr|brute|ideal")->required();
  embed_cmd->add_option("--alpha", embed.alpha, "per-edge cost (default 1)");
  embed_cmd->add_option("--seed", embed.seed, "seed for randomized algorithms");
  embed_cmd->add_option("--tries", embed.tries, "embedding attempts (default 50)");
  embed_cmd->add_option("--max-passes", embed.max_passes,
                        "best-response pass limit (default 100)");
  embed_cmd->add_option("--budget", embed.budget, "ideal search node budget");
  embed_cmd->add_option("--order", embed.order, "ascending|shuffle player order");
  embed_cmd->add_option("-o,--output", embed.output, "output path (default stdout)");
  embed_cmd->add_option("--format", embed.format, "json|summary");
  embed_cmd->add_option("--stats-out", embed.stats_out, "write per-try stats JSON (cmr)");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check an embedding");
  verify_cmd->add_option("--program", verify.program, "program graph edge list")
      ->required();
  verify_cmd->add_option("--hardware", verify.hardware, "hardware graph edge list")
      ->required();
  verify_cmd->add_option("--embedding", verify.embedding, "embedding JSON")->required();
  verify_cmd->add_option("--mode", verify.mode, "minor|ideal");
  verify_cmd->add_option("-o,--output", verify.output, "output path (default stdout)");

  GameSolveOptions game_solve;
  CLI::App* game_cmd = app.add_subcommand("game", "normal-form game tools");
  game_cmd->require_subcommand(1);
  CLI::App* solve_cmd = game_cmd->add_subcommand("solve", "enumerate equilibria");
  solve_cmd->add_option("--input", game_solve.input, "game JSON")->required();
  solve_cmd->add_option("-o,--output", game_solve.output, "output path (default stdout)");

  CertifyOptions certify;
  CLI::App* certify_cmd =
      app.add_subcommand("certify", "Nash-certify a compilation profile");
  certify_cmd->add_option("--program", certify.program, "program graph edge list")
      ->required();
  certify_cmd->add_option("--hardware", certify.hardware, "hardware graph edge list")
      ->required();
  certify_cmd->add_option("--profile", certify.profile, "profile/embedding JSON")
      ->required();
  certify_cmd->add_option("--alpha", certify.alpha, "per-edge cost (default 1)");
  certify_cmd->add_option("-o,--output", certify.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (gen_cmd->parsed()) return run_gen(gen);
    if (ingest_cmd->parsed()) return run_ingest(ingest);
    if (embed_cmd->parsed()) return run_embed(embed);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (game_cmd->parsed() && solve_cmd->parsed()) return run_game_solve(game_solve);
    if (certify_cmd->parsed()) return run_certify(certify);
    std::cerr << "aqcc: no subcommand\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "aqcc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotFound& e) {
    std::cerr << "aqcc: " << e.what() << "\n";
    return kExitNotFound;
  } catch (const UsageError& e) {
    std::cerr << "aqcc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "aqcc: " << e.what() << "\n";
    return kExitUsage;
  }
}
