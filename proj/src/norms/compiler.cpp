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

#include "deolog/norms/compiler.hpp"

#include <algorithm>
#include <cctype>

#include "deolog/deontic/core.hpp"

namespace deolog::norms {

namespace {

using asp::BodyElem;
using asp::Literal;
using asp::NafLiteral;
using asp::Program;
using asp::Rule;
using asp::Term;
using asp::WeakConstraint;

std::string deontic_pred(Polarity p) {
  return p == Polarity::Obligation ? "o" : "f";
}

Literal not_deontic(Polarity p, const Term& action) {
  return asp::neg(deontic_pred(p), {action});
}

std::string sanitize_id(const std::string& id) {
  std::string out;
  for (char c : id) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else
      out += '_';
  }
  if (out.empty() || !std::islower(static_cast<unsigned char>(out[0])))
    out = "n" + out;
  return out;
}

void append_common_tail(const NormSpec& spec, std::vector<BodyElem>& body) {
  for (const auto& c : spec.conditions) body.push_back(c);
  if (spec.exception) body.push_back(NafLiteral{*spec.exception});
}

void validate(const NormSpec& spec) {
  switch (spec.kind) {
    case NormKind::Regular:
    case NormKind::Conditional:
    case NormKind::Exception:
      if (spec.actions.size() != 1)
        throw MalformedSpecError("norm " + spec.id +
                                 ": expected exactly one action");
      break;
    case NormKind::Disjunction:
    case NormKind::Conjunction:
      if (spec.actions.size() < 2)
        throw MalformedSpecError("norm " + spec.id +
                                 ": disjunction/conjunction needs >= 2 actions");
      break;
    case NormKind::ContraryToDuty:
      if (spec.actions.size() != 1 || !spec.violated_action)
        throw MalformedSpecError(
            "norm " + spec.id +
            ": contrary-to-duty needs one violated action and one consequent");
      break;
  }
  if (spec.kind == NormKind::Conditional && spec.conditions.empty())
    throw MalformedSpecError("norm " + spec.id +
                             ": conditional norm needs a condition");
  if (spec.kind == NormKind::Exception && !spec.exception)
    throw MalformedSpecError("norm " + spec.id +
                             ": exception norm needs an exception atom");
}

}  // namespace

Program compile_norm(const NormSpec& spec, int level, long long weight) {
  validate(spec);
  if (level < 2)
    throw MalformedSpecError("norm " + spec.id + ": level must be >= 2");
  if (weight < 1)
    throw MalformedSpecError("norm " + spec.id + ": weight must be >= 1");

  Program out;
  WeakConstraint wc;
  wc.weight = weight;
  wc.level = level;

  switch (spec.kind) {
    case NormKind::Regular:
    case NormKind::Conditional:
    case NormKind::Exception: {
      wc.body.push_back(not_deontic(spec.polarity, spec.actions[0]));
      append_common_tail(spec, wc.body);
      break;
    }
    case NormKind::Disjunction: {
      // Condition first, mirroring the conditional-disjunction shape.
      for (const auto& c : spec.conditions) wc.body.push_back(c);
      for (const auto& a : spec.actions)
        wc.body.push_back(not_deontic(spec.polarity, a));
      if (spec.exception) wc.body.push_back(NafLiteral{*spec.exception});
      break;
    }
    case NormKind::Conjunction: {
      Literal aux = asp::lit("aux_conj_" + sanitize_id(spec.id));
      Rule aux_rule;
      aux_rule.head.push_back(aux);
      for (const auto& a : spec.actions)
        aux_rule.body.push_back(asp::lit(deontic_pred(spec.polarity), {a}));
      out.rules.push_back(std::move(aux_rule));
      wc.body.push_back(NafLiteral{aux});
      append_common_tail(spec, wc.body);
      break;
    }
    case NormKind::ContraryToDuty: {
      // The trigger is the violation of the other norm: -do(a) for a
      // violated obligation, do(a) for a violated prohibition.
      bool violated_obligation = spec.violated_polarity == Polarity::Obligation;
      wc.body.push_back(Literal{asp::atom("do", {*spec.violated_action}),
                                violated_obligation});
      if (spec.exception) wc.body.push_back(NafLiteral{*spec.exception});
      wc.body.push_back(not_deontic(spec.polarity, spec.actions[0]));
      for (const auto& c : spec.conditions) wc.body.push_back(c);
      break;
    }
  }
  out.weak_constraints.push_back(std::move(wc));
  return out;
}

namespace {

void check_reserved_vocabulary(const NormativeSystem& system,
                               std::vector<std::string>& warnings) {
  const auto& reserved = deontic::reserved_predicates();
  auto is_reserved = [&](const std::string& name) {
    return std::find(reserved.begin(), reserved.end(), name) != reserved.end() ||
           name.rfind("aux_conj_", 0) == 0;
  };
  auto check_plain_atom = [&](const asp::Atom& a, const std::string& where) {
    // Deontic predicates may be used with their fixed shape (arity 1;
    // happens/do conditions and do-facts are the intended usage). A
    // user atom reusing a reserved name with another arity collides.
    if (is_reserved(a.predicate) && a.args.size() != 1)
      throw MalformedSpecError("reserved predicate " + a.predicate +
                               " used with wrong shape in " + where);
    if (a.predicate.rfind("aux_conj_", 0) == 0)
      throw MalformedSpecError("predicate " + a.predicate + " in " + where +
                               " collides with reserved aux_conj_ prefix");
  };
  for (const auto& n : system.norms) {
    for (const auto& c : n.conditions) {
      if (const auto* l = std::get_if<Literal>(&c))
        check_plain_atom(l->atom, "norm " + n.id);
      else if (const auto* nl = std::get_if<NafLiteral>(&c))
        check_plain_atom(nl->lit.atom, "norm " + n.id);
    }
    if (n.exception) check_plain_atom(n.exception->atom, "norm " + n.id);
  }
  for (const auto& r : system.extra.rules)
    for (const auto& h : r.head)
      if (h.atom.predicate.rfind("aux_conj_", 0) == 0)
        throw MalformedSpecError("extra rule head collides with aux_conj_ prefix");
  (void)warnings;
}

void check_actions_declared(const NormativeSystem& system) {
  std::set<Term> declared(system.actions.begin(), system.actions.end());
  auto need = [&](const Term& a, const std::string& where) {
    if (!declared.count(a))
      throw MalformedSpecError("action " + a.text() + " referenced by " +
                               where + " is not declared");
  };
  for (const auto& n : system.norms) {
    for (const auto& a : n.actions) need(a, "norm " + n.id);
    if (n.violated_action) need(*n.violated_action, "norm " + n.id);
  }
  for (const auto& [a, b] : system.incompatible) {
    need(a, "incompatibility");
    need(b, "incompatibility");
  }
  for (const auto& [a, b] : system.dependencies) {
    need(a, "dependency");
    need(b, "dependency");
  }
}

// Step 3 Case 2 is manual weight arithmetic; warn when a norm conflicts
// with several others on its own level while everything still carries
// the default weight (levels alone cannot arbitrate such ties).
void lint_conflicting_weights(const NormativeSystem& system,
                              const std::map<std::string, int>& levels,
                              std::vector<std::string>& warnings) {
  std::map<Term, std::vector<std::string>> by_action;
  for (const auto& n : system.norms)
    for (const auto& a : n.actions) by_action[a].push_back(n.id);
  std::map<std::string, int> same_level_conflicts;
  for (const auto& [a, b] : system.incompatible) {
    for (const auto& ida : by_action[a])
      for (const auto& idb : by_action[b]) {
        if (levels.at(ida) != levels.at(idb)) continue;
        ++same_level_conflicts[ida];
        ++same_level_conflicts[idb];
      }
  }
  bool all_default = std::all_of(
      system.norms.begin(), system.norms.end(),
      [](const NormSpec& n) { return !n.weight || *n.weight == 1; });
  if (!all_default) return;
  for (const auto& [id, count] : same_level_conflicts)
    if (count >= 2)
      warnings.push_back("norm " + id + " conflicts with " +
                         std::to_string(count) +
                         " equally-ranked others but all weights are 1; "
                         "consider joint weights");
}

}  // namespace

CompiledSystem compile_system(const NormativeSystem& system) {
  CompiledSystem out;
  check_actions_declared(system);
  check_reserved_vocabulary(system, out.warnings);

  // Ids must be unique (case-insensitively: they become atom names).
  std::set<std::string> ids;
  for (const auto& n : system.norms)
    if (!ids.insert(sanitize_id(n.id)).second)
      throw MalformedSpecError("duplicate norm id " + n.id);

  PreferenceGraph graph = system.preferences;
  for (const auto& n : system.norms) graph.vertices.push_back(n.id);
  out.levels = assign_levels(graph);

  for (const auto& n : system.norms) {
    int level = out.levels.at(n.id);
    long long weight = n.weight.value_or(1);
    out.norm_program.append(compile_norm(n, level, weight));
  }
  lint_conflicting_weights(system, out.levels, out.warnings);

  for (const auto& [a, b] : system.incompatible) {
    Rule r;
    r.body.push_back(asp::lit("do", {a}));
    r.body.push_back(asp::lit("do", {b}));
    out.norm_program.rules.push_back(std::move(r));
  }
  for (const auto& [action, entailed] : system.dependencies) {
    Rule r;
    r.head.push_back(asp::lit("do", {entailed}));
    r.body.push_back(asp::lit("do", {action}));
    out.norm_program.rules.push_back(std::move(r));
  }
  out.norm_program.append(system.extra);
  for (const auto& a : system.actions) {
    Rule r;
    r.head.push_back(asp::lit("act", {a}));
    out.norm_program.rules.push_back(std::move(r));
  }

  out.full_program = deontic::common_core();
  out.full_program.append(out.norm_program);
  return out;
}

}  // namespace deolog::norms
