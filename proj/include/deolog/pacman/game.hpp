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

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "deolog/asp/ast.hpp"

namespace deolog::pacman {

/// Grid layout. Cell coordinates (cx, cy) have cy increasing northward;
/// game coordinates are doubled (Pac-man moves 2 units per step, a
/// scared ghost 1), keeping every position a non-negative integer.
struct Layout {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> wall_grid;  // row-major, index cy * width + cx
  std::set<std::pair<int, int>> pellets;
  std::set<std::pair<int, int>> power_pellets;
  std::pair<int, int> pacman_start{0, 0};
  std::pair<int, int> blue_start{0, 0};
  std::pair<int, int> orange_start{0, 0};

  bool wall(int cx, int cy) const {
    if (cx < 0 || cy < 0 || cx >= width || cy >= height) return true;
    return wall_grid[static_cast<std::size_t>(cy) * width + cx] != 0;
  }

  /// Text format: '%' wall, '.' pellet, 'o' power pellet, 'P' Pac-man,
  /// 'B' blue ghost, 'O' orange ghost, ' ' empty.
  static Layout parse(const std::string& text);
  /// The shipped default: the classic small maze.
  static const Layout& classic();
};

enum class Direction { North, East, South, West, Stop };

inline const std::vector<Direction>& all_directions() {
  static const std::vector<Direction> dirs = {
      Direction::North, Direction::East, Direction::South, Direction::West,
      Direction::Stop};
  return dirs;
}

const char* direction_name(Direction d);
std::pair<int, int> direction_delta(Direction d);  // unit step, doubled axes
Direction reverse_direction(Direction d);

enum class GhostId { Blue, Orange };

struct GhostState {
  int x = 0;  // doubled
  int y = 0;
  bool scared = false;
  int scared_timer = 0;
  Direction heading = Direction::Stop;
};

struct StepEvents {
  int pellets_eaten = 0;
  int power_pellets_eaten = 0;
  bool blue_eaten = false;
  bool orange_eaten = false;
  bool died = false;
  bool won = false;
  bool timed_out = false;
  long long score_delta = 0;
};

struct GameConfig {
  long long pellet_score = 10;
  long long power_pellet_score = 50;
  long long ghost_score = 200;
  long long step_penalty = 1;
  long long win_bonus = 500;
  long long loss_penalty = 500;
  int scared_duration = 40;
  int max_steps = 1500;
  /// A scared ghost normally avoids stepping into eating range; with
  /// these probabilities it instead moves blindly. The blue ghost is
  /// the disciplined one, the orange ghost the erratic one.
  double blue_panic_probability = 0.0;
  double orange_panic_probability = 1.0;
};

struct GameState {
  enum class Status { Ongoing, Won, Lost };

  const Layout* layout = nullptr;
  int pac_x = 0;  // doubled
  int pac_y = 0;
  GhostState blue;
  GhostState orange;
  std::set<std::pair<int, int>> pellets;
  std::set<std::pair<int, int>> power_pellets;
  long long score = 0;
  int steps = 0;
  Status status = Status::Ongoing;
  StepEvents last_events;

  bool ongoing() const { return status == Status::Ongoing; }
  std::pair<int, int> pac_cell() const { return {pac_x / 2, pac_y / 2}; }

  static GameState initial(const Layout& layout);
};

struct IllegalActionError : asp::Error {
  using asp::Error::Error;
};

/// Pac-man's legal moves: directions without a wall in the next cell,
/// plus stop. Ghost movement options live inside step().
std::set<Direction> legal_moves(const GameState& state);

/// Advance one game step: Pac-man moves two units, pellets and
/// power pellets resolve, then each ghost moves (one unit scared, two
/// unscared, uniformly random over its options, no reversing except at
/// dead ends). A scared ghost is eaten when both doubled axis distances
/// drop below 2; an unscared ghost at that distance ends the game.
GameState step(const GameState& state, Direction action, std::mt19937_64& rng,
               const GameConfig& config = {});

}  // namespace deolog::pacman
