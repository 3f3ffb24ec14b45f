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

#include "deolog/norms/system.hpp"

namespace deolog::norms {

/// Emit the weak-constraint encoding of one norm at the given level and
/// weight. Conjunctions additionally emit their auxiliary rule; the
/// auxiliary atom is aux_conj_<id>. Prohibitions substitute f for o.
asp::Program compile_norm(const NormSpec& spec, int level, long long weight);

struct CompiledSystem {
  /// The norm encodings, incompatibility/dependency constraints, extras
  /// and act declarations — everything except the common core.
  asp::Program norm_program;
  /// norm_program with the common core prepended; ready to solve.
  asp::Program full_program;
  std::map<std::string, int> levels;
  std::vector<std::string> warnings;
};

/// Steps 1-5 in one call: levels from the preference graph by sink
/// removal, per-kind weak constraints, ":- do(a1), do(a2)." per
/// incompatible pair, dependency rules, extras, and act facts. Output
/// order is canonical: norms in declaration order, then constraints,
/// dependencies, extras, act facts. Pure: equal systems compile to
/// byte-identical programs.
CompiledSystem compile_system(const NormativeSystem& system);

}  // namespace deolog::norms
