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

#include "deolog/corpus/corpus.hpp"

#include <algorithm>

#include "deolog/asp/parser.hpp"
#include "deolog/deontic/core.hpp"

namespace deolog::corpus {

namespace {

// The fence scenario: a prohibition with an exception (no fence unless
// by the sea) and a contrary-to-duty obligation (a fence must be white)
// inheriting the exception.
constexpr const char* kFenceProgram = R"(
:~ -f(have_fence), not location(sea). [1:2]
:~ do(have_fence), not location(sea), -o(have_white_fence). [1:2]
act(have_fence).
act(have_white_fence).
)";

// The driving scenario, O1-O8. The level table comes from sink removal
// over O1>O2, O3>O1, O8>O2, O3>O8, O8>O7.
constexpr const char* kDrivingProgram = R"(
:~ redlight, -o(stop). [1:3]
:~ not happens(merge), -f(stop). [1:2]
:~ happens(emergency_vehicle), -o(move). [1:4]
:~ winter, -o(equip_allseason), -o(equip_winter). [1:2]
:~ -f(damage). [1:2]
licenses :- o(carry_license), o(carry_registration).
:~ not licenses, not theft. [1:2]
:~ happens(damage), -o(drive_police). [1:2]
:~ happens(medical_emergency), -o(give_first_aid). [1:3]
:- do(stop), do(move).
:- do(drive_police), do(give_first_aid).
:- theft, do(carry_license), do(carry_registration).
do(stop) :- do(give_first_aid).
:- do(give_first_aid), not happens(medical_emergency).
act(stop).
act(move).
act(damage).
act(equip_allseason).
act(equip_winter).
act(carry_license).
act(carry_registration).
act(drive_police).
act(give_first_aid).
)";

std::vector<CorpusEntry> build_entries() {
  std::vector<CorpusEntry> out;

  out.push_back({
      "core",
      "common core alone: optimal sets derive no obligation or prohibition",
      "",
      "act(action).",
      2,
      {},
      {"o(action)", "f(action)"},
      std::vector<std::string>{},
  });

  out.push_back({
      "ross",
      "obligation to mail must not spread to burning the letter",
      ":~ -o(mail). [1:2]\n",
      "act(mail).\nact(burn).",
      2,
      {"o(mail)"},
      {"o(burn)", "f(burn)", "f(mail)"},
      std::vector<std::string>{"o(mail)"},
  });

  out.push_back({
      "plato",
      "emergency overrides the dinner obligation",
      ":~ -o(help), happens(emergency). [1:3]\n"
      ":~ -o(meet). [1:2]\n"
      ":- do(help), do(meet).\n",
      "act(meet).\nact(help).\nhappens(emergency).",
      1,
      {"o(help)", "do(help)"},
      {"o(meet)", "do(meet)"},
      std::vector<std::string>{"o(help)"},
  });

  out.push_back({
      "fence_sea_fence",
      "by the sea with a fence: the fence need not be white",
      kFenceProgram,
      "location(sea).\ndo(have_fence).",
      2,
      {},
      {"o(have_white_fence)", "f(have_fence)"},
      std::vector<std::string>{},
  });

  out.push_back({
      "fence_fence",
      "inland with a fence: the contrary-to-duty obligation fires",
      kFenceProgram,
      "do(have_fence).",
      1,
      {"o(have_white_fence)"},
      {"f(have_fence)"},
      std::vector<std::string>{"o(have_white_fence)"},
  });

  out.push_back({
      "fence_bare",
      "inland without a fence: fences are forbidden",
      kFenceProgram,
      "",
      2,
      {"f(have_fence)"},
      {"o(have_white_fence)"},
      std::vector<std::string>{"f(have_fence)"},
  });

  out.push_back({
      "fence_sea",
      "by the sea without a fence: nothing is derived",
      kFenceProgram,
      "location(sea).",
      4,
      {},
      {"f(have_fence)", "o(have_white_fence)"},
      std::vector<std::string>{},
  });

  out.push_back({
      "driving_ex1",
      "winter, stolen papers, red light",
      kDrivingProgram,
      "winter.\ntheft.\n-do(equip_allseason).\nredlight.",
      std::nullopt,
      {},
      {},
      std::vector<std::string>{"f(damage)", "o(stop)", "o(equip_winter)"},
  });

  out.push_back({
      "driving_ex2",
      "medical emergency, ambulance approaching, car merging",
      kDrivingProgram,
      "happens(medical_emergency).\nhappens(emergency_vehicle).\nhappens(merge).",
      std::nullopt,
      {},
      {},
      std::vector<std::string>{"f(damage)", "o(move)", "o(carry_license)",
                               "o(carry_registration)"},
  });

  out.push_back({
      "driving_ex3",
      "medical emergency after causing damage",
      kDrivingProgram,
      "happens(medical_emergency).\nhappens(damage).",
      std::nullopt,
      {},
      {},
      std::vector<std::string>{"f(damage)", "o(carry_license)",
                               "o(carry_registration)", "o(give_first_aid)"},
  });

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& entries() {
  static const std::vector<CorpusEntry> all = build_entries();
  return all;
}

EntryResult run_entry(const CorpusEntry& entry,
                      const asp::SolveOptions& options) {
  EntryResult result;
  result.name = entry.name;

  asp::ParseResult prog = asp::parse(entry.program_text);
  asp::ParseResult facts = asp::parse(entry.facts_text);
  if (!prog.ok() || !facts.ok()) {
    result.failures.push_back("fixture failed to parse");
    return result;
  }

  deontic::ClosureResult closure =
      deontic::deontic_closure(prog.program, facts.program, options);
  if (closure.inconsistent()) {
    result.inconsistent = true;
    result.failures.push_back("program is inconsistent");
    return result;
  }
  const auto& verdict = closure.verdict;
  result.optimal_count = static_cast<int>(verdict.optimal_sets.size());

  if (entry.expect_optimal_count &&
      result.optimal_count != *entry.expect_optimal_count)
    result.failures.push_back(
        "expected " + std::to_string(*entry.expect_optimal_count) +
        " optimal answer sets, got " + std::to_string(result.optimal_count));

  for (const auto& text : entry.expect_cautious) {
    asp::Literal l = asp::parse_literal(text);
    if (!verdict.cautiously_holds(l))
      result.failures.push_back("expected " + text +
                                " in every optimal answer set");
  }
  for (const auto& text : entry.expect_absent) {
    asp::Literal l = asp::parse_literal(text);
    if (verdict.bravely_holds(l))
      result.failures.push_back("expected " + text +
                                " in no optimal answer set");
  }
  if (entry.expect_deontic_exact) {
    std::set<std::string> expected(entry.expect_deontic_exact->begin(),
                                   entry.expect_deontic_exact->end());
    std::set<std::string> actual;
    for (const auto& t : verdict.cautious_obligations)
      actual.insert("o(" + t.text() + ")");
    for (const auto& t : verdict.cautious_prohibitions)
      actual.insert("f(" + t.text() + ")");
    if (expected != actual) {
      std::string diff = "cautious deontic conclusions {";
      bool first = true;
      for (const auto& a : actual) {
        if (!first) diff += ", ";
        first = false;
        diff += a;
      }
      diff += "} differ from expected {";
      first = true;
      for (const auto& e : expected) {
        if (!first) diff += ", ";
        first = false;
        diff += e;
      }
      diff += "}";
      result.failures.push_back(diff);
    }
  }

  result.passed = result.failures.empty();
  return result;
}

std::vector<EntryResult> run_corpus(const std::string& filter,
                                    const asp::SolveOptions& options) {
  std::vector<EntryResult> out;
  for (const auto& e : entries()) {
    if (!filter.empty() && e.name.find(filter) == std::string::npos) continue;
    out.push_back(run_entry(e, options));
  }
  return out;
}

}  // namespace deolog::corpus
