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

#include "deolog/deontic/core.hpp"
#include "deolog/pacman/game.hpp"

namespace deolog::pacman {

enum class NormBaseKind { Vegan, Vegetarian, WeakVegan };

const char* norm_base_name(NormBaseKind kind);

/// Supervisor memory carried across steps: the one-step ate-ghost event
/// (weak-vegan stop obligation) and the permanently latched exception.
struct SupervisorMemory {
  bool exception_latched = false;
  bool ate_ghost_last_step = false;

  /// Fold in the events of the step that produced `state`.
  SupervisorMemory observe(const GameState& state) const;
};

/// A compiled norm base: directional prohibitions for the three
/// eat-precursor geometries of each protected ghost, the pairwise
/// action-exclusion constraints, act declarations, and the hard
/// always-a-move constraint.
struct NormBase {
  NormBaseKind kind = NormBaseKind::Vegan;
  asp::Program program;

  static const NormBase& get(NormBaseKind kind);
};

/// Facts describing the game state for the solver: pacman(X,Y),
/// blueGhost(X,Y,B), orangeGhost(X,Y,B), f(d) for wall-blocked
/// directions, plus happens(ate_ghost) and exception from memory.
asp::Program state_to_facts(const GameState& state,
                            const SupervisorMemory& memory);

struct FilterResult {
  std::set<Direction> allowed;
  /// Weak vegan: o(stop) cautious, allowed collapsed to {stop}.
  bool forced_stop = false;
  /// Shield fail-open incident: solver found no answer set (or removed
  /// every legal move); allowed fell back to all legal moves.
  bool fail_open = false;
  deontic::DeonticVerdict verdict;
  SupervisorMemory memory;
};

/// One shield step: solve norm base + common core + state facts and
/// remove every direction that is forbidden in all optimal answer sets.
FilterResult supervisor_filter(const GameState& state, const NormBase& base,
                               const SupervisorMemory& memory);

/// Solve options sized for a layout (maxint covers doubled coordinates).
asp::SolveOptions supervisor_options(const Layout& layout);

}  // namespace deolog::pacman
