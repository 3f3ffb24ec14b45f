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

#include <map>

#include "deolog/asp/ast.hpp"

namespace deolog::norms {

enum class NormKind {
  Regular,
  Conditional,
  Disjunction,
  Conjunction,
  Exception,
  ContraryToDuty,
};

enum class Polarity { Obligation, Prohibition };

/// One norm of a normative system. Every kind accepts optional condition
/// literals and an optional exception atom; they compose into the weak
/// constraint body (conditions positively, the exception under default
/// negation).
struct NormSpec {
  std::string id;
  NormKind kind = NormKind::Regular;
  Polarity polarity = Polarity::Obligation;
  /// Target action(s): one for regular/conditional/exception, two or
  /// more for disjunction/conjunction, the consequent for CTD.
  std::vector<asp::Term> actions;
  std::vector<asp::BodyElem> conditions;
  std::optional<asp::Literal> exception;
  /// CTD only: the action whose violated norm triggers the consequent,
  /// and the polarity of that violated norm (an obligation is violated
  /// by -do(a), a prohibition by do(a)).
  std::optional<asp::Term> violated_action;
  Polarity violated_polarity = Polarity::Obligation;
  std::optional<long long> weight;
};

/// Strict preference graph: an edge (stronger, weaker) reads
/// "stronger takes priority over weaker". Must be acyclic. Non-strict
/// preferences are expressed by equivalence groups, which are collapsed
/// to single vertices before level assignment.
struct PreferenceGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<std::string>> equivalences;
};

struct NormativeSystem {
  std::vector<NormSpec> norms;
  PreferenceGraph preferences;
  std::vector<std::pair<asp::Term, asp::Term>> incompatible;
  /// (action, entailed): taking `action` entails taking `entailed`,
  /// emitted as "do(entailed) :- do(action)."
  std::vector<std::pair<asp::Term, asp::Term>> dependencies;
  std::vector<asp::Term> actions;
  /// Extra scenario rules and facts, appended verbatim.
  asp::Program extra;
};

struct CyclicPreferencesError : asp::Error {
  explicit CyclicPreferencesError(std::vector<std::string> cycle_path);
  std::vector<std::string> cycle;
};

struct MalformedSpecError : asp::Error {
  using asp::Error::Error;
};

/// Iterated sink removal over the preference graph: sinks of round k
/// get level k+1, are removed, and the process repeats. A norm with no
/// outgoing preference edges always lands on level 2.
std::map<std::string, int> assign_levels(const PreferenceGraph& graph);

}  // namespace deolog::norms
