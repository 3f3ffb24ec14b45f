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

#include "deolog/pacman/game.hpp"

namespace deolog::pacman {

/// Deterministic greedy policy standing in for the trained agent: among
/// the allowed moves, pick the one whose landing cell minimizes the
/// walking distance to the nearest pellet, avoiding cells within two
/// (undoubled) Manhattan units of an unscared ghost when any safe move
/// exists. Ties break in the fixed order north, east, south, west, stop.
Direction scripted_agent(const GameState& state,
                         const std::set<Direction>& allowed);

/// Walking distance (in cells) from `from_cell` to the nearest pellet;
/// -1 when no pellet is reachable.
int pellet_distance(const GameState& state, std::pair<int, int> from_cell);

}  // namespace deolog::pacman
