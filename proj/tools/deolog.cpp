/*
 *  Copyright (C) 2026  deolog contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "deolog/asp/parser.hpp"
#include "deolog/corpus/corpus.hpp"
#include "deolog/deontic/core.hpp"
#include "deolog/norms/compiler.hpp"
#include "deolog/norms/document.hpp"
#include "deolog/pacman/batch.hpp"

namespace {

using namespace deolog;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw asp::Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

asp::SolveOptions options_from_env() {
  asp::SolveOptions opt;
  if (const char* v = std::getenv("DEOLOG_MAXINT")) opt.ground.maxint = std::atoll(v);
  if (const char* v = std::getenv("DEOLOG_GROUND_CAP"))
    opt.ground.instance_cap = static_cast<std::size_t>(std::atoll(v));
  if (const char* v = std::getenv("DEOLOG_ENUM_CAP"))
    opt.enum_cap = static_cast<std::size_t>(std::atoll(v));
  return opt;
}

void print_model_text(const asp::Interpretation& s, const asp::CostVector& c) {
  std::cout << asp::interpretation_text(s) << "\n  cost " << c.text() << "\n";
}

void print_model_structured(const asp::Interpretation& s,
                            const asp::CostVector& c) {
  std::cout << "answer-set\t" << asp::interpretation_text(s) << "\t" << c.text()
            << "\n";
}

int cmd_solve(const std::string& path, bool all, int max_models,
              const std::string& format, long long maxint_flag,
              bool with_core) {
  asp::SolveOptions opt = options_from_env();
  if (maxint_flag >= 0) opt.ground.maxint = maxint_flag;

  asp::ParseResult parsed = asp::parse(asp::SourceProgram{read_file(path), path});
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) std::cerr << path << ": " << d.to_string() << "\n";
    return kExitUsage;
  }
  if (with_core) {
    asp::Program with = deontic::common_core();
    with.append(parsed.program);
    parsed.program = std::move(with);
  }

  bool structured = format == "structured";
  std::size_t printed = 0;
  auto emit = [&](const asp::Interpretation& s, const asp::CostVector& c) {
    if (max_models > 0 && printed >= static_cast<std::size_t>(max_models)) return;
    ++printed;
    if (structured)
      print_model_structured(s, c);
    else
      print_model_text(s, c);
  };

  if (all) {
    auto sets = asp::enumerate_answer_sets(parsed.program, opt);
    if (sets.empty()) {
      std::cerr << "no answer sets\n";
      return kExitInconsistent;
    }
    for (const auto& s : sets) emit(s, asp::cost(s, parsed.program, opt.ground));
    if (!structured) std::cout << sets.size() << " answer set(s)\n";
  } else {
    auto optimal = asp::optimal_answer_sets(parsed.program, opt);
    if (optimal.empty()) {
      std::cerr << "no answer sets\n";
      return kExitInconsistent;
    }
    for (const auto& m : optimal) emit(m.interpretation, m.cost);
    if (!structured)
      std::cout << optimal.size() << " optimal answer set(s), cost "
                << optimal.front().cost.text() << "\n";
  }
  return kExitOk;
}

int cmd_compile(const std::string& path, bool with_core, bool levels) {
  norms::NormativeSystem sys = norms::parse_norm_spec(read_file(path));
  norms::CompiledSystem compiled = norms::compile_system(sys);
  for (const auto& w : compiled.warnings) std::cerr << "warning: " << w << "\n";
  if (levels) {
    for (const auto& [id, level] : compiled.levels)
      std::cout << id << "\t" << level << "\n";
    return kExitOk;
  }
  std::cout << asp::print(with_core ? compiled.full_program
                                    : compiled.norm_program);
  return kExitOk;
}

int cmd_corpus(const std::string& filter) {
  asp::SolveOptions opt = options_from_env();
  auto results = corpus::run_corpus(filter, opt);
  if (results.empty()) {
    std::cerr << "no corpus entries match '" << filter << "'\n";
    return kExitUsage;
  }
  bool all_passed = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.passed) {
      all_passed = false;
      for (const auto& f : r.failures) std::cout << "\n       " << f;
    }
    std::cout << "\n";
  }
  return all_passed ? kExitOk : kExitInconsistent;
}

int cmd_pacman(const std::string& base, int games, uint64_t seed,
               const std::string& layout_path, bool trace,
               const std::string& format, int max_steps) {
  pacman::NormBaseKind kind;
  if (base == "vegan")
    kind = pacman::NormBaseKind::Vegan;
  else if (base == "vegetarian")
    kind = pacman::NormBaseKind::Vegetarian;
  else if (base == "weak-vegan")
    kind = pacman::NormBaseKind::WeakVegan;
  else {
    std::cerr << "unknown norm base '" << base << "'\n";
    return kExitUsage;
  }

  pacman::Layout layout = layout_path.empty()
                              ? pacman::Layout::classic()
                              : pacman::Layout::parse(read_file(layout_path));
  pacman::GameConfig config;
  if (max_steps > 0) config.max_steps = max_steps;

  pacman::BatchResult result = pacman::run_games(
      kind, games, seed, layout, config, trace ? &std::cerr : nullptr);

  if (format == "structured") {
    for (const auto& g : result.games) {
      nlohmann::json j{{"game", g.index},
                       {"score", g.score},
                       {"won", g.won},
                       {"steps", g.steps},
                       {"blue_eaten", g.blue_eaten},
                       {"orange_eaten", g.orange_eaten},
                       {"fail_open", g.fail_open_incidents},
                       {"unforced_protected_eats", g.unforced_protected_eats},
                       {"post_eat_stop_violations", g.post_eat_stop_violations}};
      std::cout << j.dump() << "\n";
    }
    // No wall-clock fields here: structured output is byte-reproducible.
    const auto& s = result.stats;
    nlohmann::json j{{"summary", true},
                     {"norm_base", pacman::norm_base_name(kind)},
                     {"games", s.games},
                     {"win_rate", s.win_rate()},
                     {"avg_score", s.avg_score},
                     {"max_score", s.max_score},
                     {"avg_blue_eaten", s.avg_blue_eaten},
                     {"avg_orange_eaten", s.avg_orange_eaten}};
    std::cout << j.dump() << "\n";
  } else {
    const auto& s = result.stats;
    std::cout << "norm base         " << pacman::norm_base_name(kind) << "\n"
              << "games             " << s.games << "\n"
              << "% games won       " << s.win_rate() << "\n"
              << "game score avg    " << s.avg_score << " [max " << s.max_score
              << "]\n"
              << "avg ghosts eaten  " << s.avg_blue_eaten << "/"
              << s.avg_orange_eaten << " (blue/orange)\n"
              << "avg time (s)      " << s.avg_seconds << "\n";
    int unforced = result.total_unforced_protected_eats();
    if (unforced > 0)
      std::cout << "UNFORCED PROTECTED EATS: " << unforced << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deontic reasoning toolkit: answer-set solving with weak "
               "constraints, norm compilation, paradox corpus, and a "
               "norm-supervised Pac-man"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve a logic program file");
  std::string solve_path;
  bool solve_all = false, solve_optimal = false, solve_with_core = false;
  int solve_max_models = 0;
  long long solve_maxint = -1;
  std::string solve_format = "text";
  solve->add_option("program", solve_path, "program file")->required();
  solve->add_flag("--all", solve_all, "print all answer sets");
  solve->add_flag("--optimal", solve_optimal, "print optimal answer sets (default)");
  solve->add_flag("--with-core", solve_with_core, "prepend the deontic common core");
  solve->add_option("--max-models", solve_max_models, "limit printed models");
  solve->add_option("--maxint", solve_maxint, "integer domain bound");
  solve->add_option("--format", solve_format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* compile = app.add_subcommand("compile", "compile a norm-spec document");
  std::string compile_path;
  bool with_core = false, show_levels = false;
  compile->add_option("normspec", compile_path, "norm-spec JSON file")->required();
  compile->add_flag("--with-core", with_core, "include the common core");
  compile->add_flag("--levels", show_levels, "print the norm level table");

  auto* corpus_cmd = app.add_subcommand("corpus", "run the deontic paradox corpus");
  std::string corpus_filter;
  corpus_cmd->add_option("--filter", corpus_filter, "only entries containing this substring");

  auto* pac = app.add_subcommand("pacman", "run supervised Pac-man batches");
  std::string pac_base = "vegan", pac_layout, pac_format = "text";
  int pac_games = 1, pac_max_steps = 0;
  uint64_t pac_seed = 1;
  bool pac_trace = false;
  pac->add_option("--base", pac_base, "vegan|vegetarian|weak-vegan");
  pac->add_option("--games", pac_games, "number of games")->check(CLI::PositiveNumber);
  pac->add_option("--seed", pac_seed, "random seed");
  pac->add_option("--layout", pac_layout, "layout file (default: shipped classic)");
  pac->add_option("--max-steps", pac_max_steps, "per-game step cap");
  pac->add_flag("--trace", pac_trace, "write per-step trace to stderr");
  pac->add_option("--format", pac_format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve)
      return cmd_solve(solve_path, solve_all && !solve_optimal,
                       solve_max_models, solve_format, solve_maxint,
                       solve_with_core);
    if (*compile)
      return cmd_compile(compile_path, with_core, show_levels);
    if (*corpus_cmd) return cmd_corpus(corpus_filter);
    if (*pac)
      return cmd_pacman(pac_base, pac_games, pac_seed, pac_layout, pac_trace,
                        pac_format, pac_max_steps);
  } catch (const asp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
