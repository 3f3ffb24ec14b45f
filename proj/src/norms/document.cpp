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

#include "deolog/norms/document.hpp"

#include <json.hpp>

#include "deolog/asp/parser.hpp"

namespace deolog::norms {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg, const std::string& where) {
  throw SchemaError(msg, where);
}

std::string get_string(const json& j, const char* key, const std::string& where,
                       bool required = true) {
  auto it = j.find(key);
  if (it == j.end()) {
    if (required) fail(std::string("missing key '") + key + "'", where);
    return {};
  }
  if (!it->is_string()) fail(std::string("'") + key + "' must be a string", where);
  return it->get<std::string>();
}

asp::Term parse_action_term(const std::string& text, const std::string& where) {
  try {
    asp::Literal l = asp::parse_literal(text);
    if (l.strong_neg || !l.atom.is_ground())
      fail("action must be a ground positive term: " + text, where);
    if (l.atom.args.empty()) return asp::Term::constant(l.atom.predicate);
    return asp::Term::compound(l.atom.predicate, l.atom.args);
  } catch (const SchemaError&) {
    throw;
  } catch (const asp::Error&) {
    fail("malformed action term: " + text, where);
  }
}

asp::BodyElem parse_condition(const std::string& text, const std::string& where) {
  std::string t = text;
  bool naf = false;
  if (t.rfind("not ", 0) == 0) {
    naf = true;
    t = t.substr(4);
  }
  try {
    asp::Literal l = asp::parse_literal(t);
    if (!l.is_ground()) fail("condition must be ground: " + text, where);
    if (naf) return asp::NafLiteral{l};
    return l;
  } catch (const SchemaError&) {
    throw;
  } catch (const asp::Error&) {
    fail("malformed condition literal: " + text, where);
  }
}

NormKind parse_kind(const std::string& kind, const std::string& where) {
  if (kind == "regular") return NormKind::Regular;
  if (kind == "conditional") return NormKind::Conditional;
  if (kind == "disjunction") return NormKind::Disjunction;
  if (kind == "conjunction") return NormKind::Conjunction;
  if (kind == "exception") return NormKind::Exception;
  if (kind == "contrary_to_duty") return NormKind::ContraryToDuty;
  fail("unknown norm kind '" + kind + "'", where);
}

NormSpec parse_norm(const json& j, const std::string& where) {
  if (!j.is_object()) fail("norm entry must be an object", where);
  NormSpec n;
  n.id = get_string(j, "id", where);
  n.kind = parse_kind(get_string(j, "kind", where), where);
  std::string pol = get_string(j, "polarity", where, false);
  if (pol.empty() || pol == "obligation")
    n.polarity = Polarity::Obligation;
  else if (pol == "prohibition")
    n.polarity = Polarity::Prohibition;
  else
    fail("polarity must be 'obligation' or 'prohibition'", where);

  if (j.contains("action"))
    n.actions.push_back(parse_action_term(get_string(j, "action", where), where));
  if (j.contains("actions")) {
    const auto& arr = j.at("actions");
    if (!arr.is_array()) fail("'actions' must be an array", where);
    for (const auto& a : arr) {
      if (!a.is_string()) fail("'actions' entries must be strings", where);
      n.actions.push_back(parse_action_term(a.get<std::string>(), where));
    }
  }
  if (j.contains("conditions")) {
    const auto& arr = j.at("conditions");
    if (!arr.is_array()) fail("'conditions' must be an array", where);
    for (const auto& c : arr) {
      if (!c.is_string()) fail("'conditions' entries must be strings", where);
      n.conditions.push_back(parse_condition(c.get<std::string>(), where));
    }
  }
  if (j.contains("exception")) {
    std::string e = get_string(j, "exception", where);
    try {
      n.exception = asp::parse_literal(e);
    } catch (const asp::Error&) {
      fail("malformed exception atom: " + e, where);
    }
  }
  if (j.contains("violated")) {
    n.violated_action =
        parse_action_term(get_string(j, "violated", where), where);
    std::string vp = get_string(j, "violated_polarity", where, false);
    if (vp.empty() || vp == "obligation")
      n.violated_polarity = Polarity::Obligation;
    else if (vp == "prohibition")
      n.violated_polarity = Polarity::Prohibition;
    else
      fail("violated_polarity must be 'obligation' or 'prohibition'", where);
  }
  if (j.contains("weight")) {
    const auto& w = j.at("weight");
    if (!w.is_number_integer() || w.get<long long>() < 1)
      fail("'weight' must be a positive integer", where);
    n.weight = w.get<long long>();
  }
  return n;
}

std::vector<std::pair<std::string, std::string>> parse_string_pairs(
    const json& j, const std::string& where) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.is_array()) fail("expected an array of [a, b] pairs", where);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& p = j[i];
    std::string at = where + "/" + std::to_string(i);
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      fail("expected a [a, b] string pair", at);
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

asp::Program parse_statements(const json& j, const std::string& where) {
  asp::Program out;
  if (!j.is_array()) fail("expected an array of statements", where);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_string()) fail("statement must be a string", at);
    asp::ParseResult r = asp::parse(j[i].get<std::string>());
    if (!r.ok()) fail("malformed statement: " + r.diagnostics.front().message, at);
    out.append(r.program);
  }
  return out;
}

}  // namespace

SchemaError::SchemaError(std::string message, std::string loc)
    : asp::Error("schema error at " + loc + ": " + message),
      location(std::move(loc)) {}

NormativeSystem parse_norm_spec(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) fail("document is not valid JSON", "/");
  if (!doc.is_object()) fail("document root must be an object", "/");

  static const std::set<std::string> known = {
      "norms",        "preferences", "equivalences", "incompatible",
      "dependencies", "actions",     "rules",        "facts"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) fail("unknown section '" + key + "'", "/" + key);

  NormativeSystem sys;
  if (doc.contains("norms")) {
    const auto& arr = doc.at("norms");
    if (!arr.is_array()) fail("'norms' must be an array", "/norms");
    for (std::size_t i = 0; i < arr.size(); ++i)
      sys.norms.push_back(parse_norm(arr[i], "/norms/" + std::to_string(i)));
  }
  if (doc.contains("preferences"))
    sys.preferences.edges =
        parse_string_pairs(doc.at("preferences"), "/preferences");
  if (doc.contains("equivalences")) {
    const auto& arr = doc.at("equivalences");
    if (!arr.is_array()) fail("'equivalences' must be an array", "/equivalences");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& g = arr[i];
      std::string at = "/equivalences/" + std::to_string(i);
      if (!g.is_array()) fail("equivalence group must be an array", at);
      std::vector<std::string> group;
      for (const auto& m : g) {
        if (!m.is_string()) fail("group members must be strings", at);
        group.push_back(m.get<std::string>());
      }
      sys.preferences.equivalences.push_back(std::move(group));
    }
  }
  if (doc.contains("incompatible"))
    for (auto& [a, b] : parse_string_pairs(doc.at("incompatible"), "/incompatible"))
      sys.incompatible.emplace_back(parse_action_term(a, "/incompatible"),
                                    parse_action_term(b, "/incompatible"));
  if (doc.contains("dependencies"))
    for (auto& [a, b] : parse_string_pairs(doc.at("dependencies"), "/dependencies"))
      sys.dependencies.emplace_back(parse_action_term(a, "/dependencies"),
                                    parse_action_term(b, "/dependencies"));
  if (doc.contains("actions")) {
    const auto& arr = doc.at("actions");
    if (!arr.is_array()) fail("'actions' must be an array", "/actions");
    for (const auto& a : arr) {
      if (!a.is_string()) fail("'actions' entries must be strings", "/actions");
      sys.actions.push_back(parse_action_term(a.get<std::string>(), "/actions"));
    }
  }
  if (doc.contains("rules")) sys.extra.append(parse_statements(doc.at("rules"), "/rules"));
  if (doc.contains("facts")) sys.extra.append(parse_statements(doc.at("facts"), "/facts"));

  // Every norm id referenced by a preference edge must exist.
  std::set<std::string> ids;
  for (const auto& n : sys.norms) ids.insert(n.id);
  for (const auto& [s, w] : sys.preferences.edges) {
    if (!ids.count(s)) fail("preference references unknown norm " + s, "/preferences");
    if (!ids.count(w)) fail("preference references unknown norm " + w, "/preferences");
  }
  for (const auto& g : sys.preferences.equivalences)
    for (const auto& m : g)
      if (!ids.count(m)) fail("equivalence references unknown norm " + m, "/equivalences");
  return sys;
}

}  // namespace deolog::norms
