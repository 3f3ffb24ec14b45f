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

#include "deolog/asp/ground.hpp"

namespace deolog::asp {

struct SolveOptions {
  GroundOptions ground;
  /// Budget on search nodes visited while enumerating candidate sets.
  std::size_t enum_cap = std::size_t{1} << 20;
};

/// S |= r for a ground rule: if the body holds in S (positive part
/// contained, default-negated part disjoint, builtins true) then some
/// head literal is in S. Constraints are satisfied iff their body fails.
bool satisfies(const Interpretation& interp, const Rule& rule,
               long long maxint = GroundOptions{}.maxint);

/// True iff the ground weak constraint's body holds in S.
bool violates(const Interpretation& interp, const WeakConstraint& wc,
              long long maxint = GroundOptions{}.maxint);

/// Answer-set test in the form used throughout: S satisfies every rule
/// of P(S) = {r | S |= B(r)} and no proper subset of S satisfies P(S).
bool is_answer_set(const Interpretation& interp, const Program& ground_program,
                   long long maxint = GroundOptions{}.maxint);

/// Alternative route via the Gelfond-Lifschitz reduct: S is a minimal
/// model of the program obtained by deleting rules whose default-negated
/// body intersects S and stripping the remaining default negation.
/// Kept alongside is_answer_set so the two definitions can be compared
/// on any program; they are expected to agree.
bool is_answer_set_gl(const Interpretation& interp,
                      const Program& ground_program,
                      long long maxint = GroundOptions{}.maxint);

/// All answer sets in deterministic order (lexicographic by literal).
/// Grounds the program first when needed. Throws BaseTooLargeError when
/// the search exceeds options.enum_cap nodes.
std::vector<Interpretation> enumerate_answer_sets(
    const Program& program, const SolveOptions& options = {});

/// Sum of weights of violated ground weak constraints, per level.
CostVector cost(const Interpretation& interp, const Program& program,
                const GroundOptions& options = {});

struct OptimalModel {
  Interpretation interpretation;
  CostVector cost;
};

/// Answer sets minimal under lexicographic cost comparison (higher
/// levels first); all ties are returned, in deterministic order.
std::vector<OptimalModel> optimal_answer_sets(const Program& program,
                                              const SolveOptions& options = {});

}  // namespace deolog::asp
