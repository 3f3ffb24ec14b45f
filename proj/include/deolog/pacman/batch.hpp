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

#include <iosfwd>

#include "deolog/pacman/supervisor.hpp"

namespace deolog::pacman {

struct GameRecord {
  int index = 0;
  long long score = 0;
  bool won = false;
  int steps = 0;
  int blue_eaten = 0;
  int orange_eaten = 0;
  double seconds = 0;
  int fail_open_incidents = 0;
  /// Eats of a protected ghost in states that were not provably forced
  /// (neither a fresh scare nor a position where every legal move was
  /// dangerous). Zero under a sound shield.
  int unforced_protected_eats = 0;
  /// Weak vegan: steps right after an eat that were not stop.
  int post_eat_stop_violations = 0;
};

struct RunStats {
  int games = 0;
  int wins = 0;
  double avg_score = 0;
  long long max_score = 0;
  double avg_blue_eaten = 0;
  double avg_orange_eaten = 0;
  double avg_seconds = 0;

  double win_rate() const { return games ? 100.0 * wins / games : 0; }
};

struct BatchResult {
  RunStats stats;
  std::vector<GameRecord> games;

  int total_unforced_protected_eats() const;
  int total_post_eat_stop_violations() const;
};

/// True when the paper's case 1-3 geometry makes `move` dangerous with
/// respect to a scared ghost at (gx, gy): some precursor constraint for
/// that move fires at this relative position. Used by the per-trace
/// audit of forced eats.
bool geometry_danger(int pac_x, int pac_y, int gx, int gy, Direction move);

/// Run n seeded games of the norm base on the layout; ghost randomness
/// derives from (seed, game index) only, so runs replay bit-identically.
/// When `trace` is non-null a per-step log line is written to it.
BatchResult run_games(NormBaseKind kind, int n, uint64_t seed,
                      const Layout& layout = Layout::classic(),
                      const GameConfig& config = {},
                      std::ostream* trace = nullptr);

}  // namespace deolog::pacman
