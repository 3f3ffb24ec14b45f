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

namespace deolog::corpus {

/// A regression scenario: a deontic program (added to the common core),
/// scenario facts, and the expected shape of the optimal answer sets.
struct CorpusEntry {
  std::string name;
  std::string description;
  std::string program_text;
  std::string facts_text;
  std::optional<int> expect_optimal_count;
  /// Literals required in every optimal answer set.
  std::vector<std::string> expect_cautious;
  /// Literals required in no optimal answer set.
  std::vector<std::string> expect_absent;
  /// When set: the cautious positive o/f literals must equal this set.
  std::optional<std::vector<std::string>> expect_deontic_exact;
};

struct EntryResult {
  std::string name;
  bool passed = false;
  bool inconsistent = false;
  int optimal_count = 0;
  std::vector<std::string> failures;
};

const std::vector<CorpusEntry>& entries();

EntryResult run_entry(const CorpusEntry& entry,
                      const asp::SolveOptions& options = {});

/// Run all entries whose name contains `filter` (all when empty).
std::vector<EntryResult> run_corpus(const std::string& filter = "",
                                    const asp::SolveOptions& options = {});

}  // namespace deolog::corpus
