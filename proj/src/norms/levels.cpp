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

#include <algorithm>

#include "deolog/norms/system.hpp"

namespace deolog::norms {

namespace {

std::string cycle_text(const std::vector<std::string>& cycle) {
  std::string out;
  for (const auto& v : cycle) {
    if (!out.empty()) out += " > ";
    out += v;
  }
  return out;
}

}  // namespace

CyclicPreferencesError::CyclicPreferencesError(std::vector<std::string> path)
    : asp::Error("cyclic preferences: " + cycle_text(path)),
      cycle(std::move(path)) {}

std::map<std::string, int> assign_levels(const PreferenceGraph& graph) {
  // Collapse declared equivalence groups to one representative.
  std::map<std::string, std::string> rep;
  auto representative = [&](const std::string& v) {
    auto it = rep.find(v);
    return it == rep.end() ? v : it->second;
  };
  for (const auto& group : graph.equivalences) {
    if (group.empty()) continue;
    for (const auto& member : group) rep[member] = group.front();
  }

  std::set<std::string> vertices;
  for (const auto& v : graph.vertices) vertices.insert(representative(v));
  std::map<std::string, std::set<std::string>> out_edges;
  for (const auto& [stronger, weaker] : graph.edges) {
    std::string s = representative(stronger), w = representative(weaker);
    vertices.insert(s);
    vertices.insert(w);
    if (s != w) out_edges[s].insert(w);
  }

  std::map<std::string, int> level;
  std::set<std::string> remaining = vertices;
  int current = 2;
  while (!remaining.empty()) {
    std::vector<std::string> sinks;
    for (const auto& v : remaining) {
      bool has_out = false;
      auto it = out_edges.find(v);
      if (it != out_edges.end())
        for (const auto& w : it->second)
          if (remaining.count(w)) {
            has_out = true;
            break;
          }
      if (!has_out) sinks.push_back(v);
    }
    if (sinks.empty()) {
      // Every remaining vertex has an outgoing edge: follow them to
      // recover a concrete cycle for the diagnostic.
      std::vector<std::string> path;
      std::set<std::string> seen;
      std::string v = *remaining.begin();
      while (!seen.count(v)) {
        seen.insert(v);
        path.push_back(v);
        for (const auto& w : out_edges[v])
          if (remaining.count(w)) {
            v = w;
            break;
          }
      }
      path.push_back(v);
      path.erase(path.begin(),
                 std::find(path.begin(), std::prev(path.end()), v));
      throw CyclicPreferencesError(std::move(path));
    }
    for (const auto& v : sinks) {
      level[v] = current;
      remaining.erase(v);
    }
    ++current;
  }

  std::map<std::string, int> full;
  for (const auto& v : graph.vertices) full[v] = level.at(representative(v));
  for (const auto& [v, l] : level)
    if (!full.count(v)) full[v] = l;
  for (const auto& [member, r] : rep)
    if (level.count(r)) full[member] = level.at(r);
  return full;
}

}  // namespace deolog::norms
