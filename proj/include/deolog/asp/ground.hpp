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

#include "deolog/asp/ast.hpp"

namespace deolog::asp {

struct GroundOptions {
  /// Integer domain bound: arithmetic results outside [0, maxint] fail.
  long long maxint = 64;
  /// Hard cap on emitted ground statements; beyond it the input is
  /// outside desk scale and GroundingExplosionError is thrown.
  std::size_t instance_cap = 200'000;
};

/// Instantiate a program. Statements that are already ground pass
/// through unchanged (builtins evaluated: false drops the statement,
/// true is removed from the body). Statements with variables are
/// instantiated by matching positive body literals against the
/// derivable-atom closure; assignment builtins bind their variable
/// functionally. Throws UnsafeRuleError / GroundingExplosionError.
Program ground(const Program& program, const GroundOptions& options = {});

/// True iff the ground builtin holds; arithmetic is restricted to
/// integers in [0, maxint]. Throws Error on non-ground input.
bool eval_builtin(const Builtin& builtin, long long maxint);

}  // namespace deolog::asp
