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

#pragma once

#include "deolog/asp/solver.hpp"

namespace deolog::deontic {

/// The six predicate roles the query layer recognizes. o/1 and f/1 mark
/// an action obligatory resp. forbidden, do/1 that the agent takes it,
/// dia/1 that it is possible, happens/1 that an event occurs, act/1
/// declares an action for deontic reasoning.
inline const std::vector<std::string>& reserved_predicates() {
  static const std::vector<std::string> names = {"o",   "f",       "do",
                                                 "dia", "happens", "act"};
  return names;
}

/// The common core: guessing rules for o/f/do per declared action, the
/// consistency constraints linking them, and the two level-1 weak
/// constraints that penalize gratuitous obligations and prohibitions.
const asp::Program& common_core();

/// Guessing rules only (no weak constraints); yields all maximal
/// consistent deontic states per action.
const asp::Program& common_core_rules();

struct DeonticVerdict {
  std::vector<asp::Term> cautious_obligations;   // o(t) in every optimal set
  std::vector<asp::Term> brave_obligations;      // o(t) in some optimal set
  std::vector<asp::Term> cautious_prohibitions;  // f(t) in every optimal set
  std::vector<asp::Term> brave_prohibitions;     // f(t) in some optimal set
  /// Per optimal answer set, its positive do-literals in canonical order.
  std::vector<std::vector<asp::Literal>> action_choices;
  asp::CostVector optimal_cost;
  std::vector<asp::Interpretation> optimal_sets;

  bool cautiously_holds(const asp::Literal& l) const;
  bool bravely_holds(const asp::Literal& l) const;
};

enum class ClosureStatus { Satisfiable, Inconsistent };

struct ClosureResult {
  ClosureStatus status = ClosureStatus::Inconsistent;
  DeonticVerdict verdict;

  bool inconsistent() const { return status == ClosureStatus::Inconsistent; }
};

/// Solve common core + norms + facts and read the deontic verdict off
/// the optimal answer sets. An unsatisfiable program (contradictory
/// hard constraints) is reported as a distinct Inconsistent outcome.
ClosureResult deontic_closure(const asp::Program& norms,
                              const asp::Program& facts,
                              const asp::SolveOptions& options = {});

/// Build a verdict from already-computed optimal answer sets.
DeonticVerdict verdict_from(const std::vector<asp::OptimalModel>& optimal);

enum class DdOutcome { Holds, Violated, Inconsistent };

/// Axiom DD (nothing both obligatory and forbidden), checked over all
/// answer sets of additions + common core.
DdOutcome check_dd(const asp::Program& additions,
                   const asp::SolveOptions& options = {});

}  // namespace deolog::deontic
