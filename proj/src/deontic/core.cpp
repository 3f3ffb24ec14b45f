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

#include "deolog/deontic/core.hpp"

#include <algorithm>

#include "deolog/asp/parser.hpp"

namespace deolog::deontic {

namespace {

constexpr const char* kCoreRulesText = R"(
o(X) v -o(X) :- act(X).
f(X) v -f(X) :- act(X).
:- o(X), -dia(X).
-dia(X) :- -do(X), act(X).
:- o(X), f(X).
do(X) v -do(X) :- act(X).
:- f(X), do(X).
happens(X) :- do(X).
:- do(X), -dia(X).
)";

constexpr const char* kCoreWeakText = R"(
:~ o(X). [1:1]
:~ f(X). [1:1]
)";

asp::Program parse_or_die(const std::string& text) {
  asp::ParseResult r = asp::parse(text);
  if (!r.ok()) throw asp::Error("internal: core program failed to parse");
  return std::move(r.program);
}

}  // namespace

const asp::Program& common_core_rules() {
  static const asp::Program p = parse_or_die(kCoreRulesText);
  return p;
}

const asp::Program& common_core() {
  static const asp::Program p = [] {
    asp::Program core = common_core_rules();
    core.append(parse_or_die(kCoreWeakText));
    return core;
  }();
  return p;
}

bool DeonticVerdict::cautiously_holds(const asp::Literal& l) const {
  if (optimal_sets.empty()) return false;
  return std::all_of(optimal_sets.begin(), optimal_sets.end(),
                     [&](const asp::Interpretation& s) { return s.count(l); });
}

bool DeonticVerdict::bravely_holds(const asp::Literal& l) const {
  return std::any_of(optimal_sets.begin(), optimal_sets.end(),
                     [&](const asp::Interpretation& s) { return s.count(l); });
}

DeonticVerdict verdict_from(const std::vector<asp::OptimalModel>& optimal) {
  DeonticVerdict v;
  if (optimal.empty()) return v;
  v.optimal_cost = optimal.front().cost;

  std::set<asp::Term> brave_o, brave_f, cautious_o, cautious_f;
  auto deontic_arg = [](const asp::Literal& l,
                        const char* pred) -> std::optional<asp::Term> {
    if (l.strong_neg || l.atom.predicate != pred || l.atom.args.size() != 1)
      return std::nullopt;
    return l.atom.args[0];
  };

  bool first = true;
  for (const auto& m : optimal) {
    v.optimal_sets.push_back(m.interpretation);
    std::set<asp::Term> this_o, this_f;
    std::vector<asp::Literal> choices;
    for (const auto& l : m.interpretation) {
      if (auto t = deontic_arg(l, "o")) this_o.insert(*t);
      if (auto t = deontic_arg(l, "f")) this_f.insert(*t);
      if (!l.strong_neg && l.atom.predicate == "do") choices.push_back(l);
    }
    v.action_choices.push_back(std::move(choices));
    brave_o.insert(this_o.begin(), this_o.end());
    brave_f.insert(this_f.begin(), this_f.end());
    if (first) {
      cautious_o = this_o;
      cautious_f = this_f;
      first = false;
    } else {
      std::set<asp::Term> io, iff;
      std::set_intersection(cautious_o.begin(), cautious_o.end(),
                            this_o.begin(), this_o.end(),
                            std::inserter(io, io.begin()));
      std::set_intersection(cautious_f.begin(), cautious_f.end(),
                            this_f.begin(), this_f.end(),
                            std::inserter(iff, iff.begin()));
      cautious_o = std::move(io);
      cautious_f = std::move(iff);
    }
  }
  v.cautious_obligations.assign(cautious_o.begin(), cautious_o.end());
  v.brave_obligations.assign(brave_o.begin(), brave_o.end());
  v.cautious_prohibitions.assign(cautious_f.begin(), cautious_f.end());
  v.brave_prohibitions.assign(brave_f.begin(), brave_f.end());
  return v;
}

ClosureResult deontic_closure(const asp::Program& norms,
                              const asp::Program& facts,
                              const asp::SolveOptions& options) {
  asp::Program full = common_core();
  full.append(norms);
  full.append(facts);
  auto optimal = asp::optimal_answer_sets(full, options);
  ClosureResult result;
  if (optimal.empty()) {
    result.status = ClosureStatus::Inconsistent;
    return result;
  }
  result.status = ClosureStatus::Satisfiable;
  result.verdict = verdict_from(optimal);
  return result;
}

DdOutcome check_dd(const asp::Program& additions,
                   const asp::SolveOptions& options) {
  asp::Program full = common_core();
  full.append(additions);
  auto sets = asp::enumerate_answer_sets(full, options);
  if (sets.empty()) return DdOutcome::Inconsistent;
  for (const auto& s : sets) {
    for (const auto& l : s) {
      if (l.strong_neg || l.atom.predicate != "o" || l.atom.args.size() != 1)
        continue;
      if (s.count(asp::lit("f", {l.atom.args[0]}))) return DdOutcome::Violated;
    }
  }
  return DdOutcome::Holds;
}

}  // namespace deolog::deontic
