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

#include "deolog/pacman/game.hpp"

#include <algorithm>

namespace deolog::pacman {

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::North: return "north";
    case Direction::East: return "east";
    case Direction::South: return "south";
    case Direction::West: return "west";
    case Direction::Stop: return "stop";
  }
  return "stop";
}

std::pair<int, int> direction_delta(Direction d) {
  switch (d) {
    case Direction::North: return {0, 1};
    case Direction::East: return {1, 0};
    case Direction::South: return {0, -1};
    case Direction::West: return {-1, 0};
    case Direction::Stop: return {0, 0};
  }
  return {0, 0};
}

Direction reverse_direction(Direction d) {
  switch (d) {
    case Direction::North: return Direction::South;
    case Direction::East: return Direction::West;
    case Direction::South: return Direction::North;
    case Direction::West: return Direction::East;
    case Direction::Stop: return Direction::Stop;
  }
  return Direction::Stop;
}

GameState GameState::initial(const Layout& layout) {
  GameState s;
  s.layout = &layout;
  s.pac_x = layout.pacman_start.first * 2;
  s.pac_y = layout.pacman_start.second * 2;
  s.blue = GhostState{layout.blue_start.first * 2, layout.blue_start.second * 2,
                      false, 0, Direction::Stop};
  s.orange = GhostState{layout.orange_start.first * 2,
                        layout.orange_start.second * 2, false, 0,
                        Direction::Stop};
  s.pellets = layout.pellets;
  s.power_pellets = layout.power_pellets;
  return s;
}

namespace {

bool open_from(const Layout& layout, int cx, int cy, Direction d) {
  auto [dx, dy] = direction_delta(d);
  return !layout.wall(cx + dx, cy + dy);
}

// Collision resolution after a single unit of movement by either side.
// Returns true when the game ended (Pac-man died).
bool resolve_contact(GameState& s, GhostState& ghost, bool is_blue,
                     const GameConfig& cfg) {
  if (std::abs(s.pac_x - ghost.x) >= 2 || std::abs(s.pac_y - ghost.y) >= 2)
    return false;
  if (ghost.scared) {
    s.score += cfg.ghost_score;
    s.last_events.score_delta += cfg.ghost_score;
    if (is_blue)
      s.last_events.blue_eaten = true;
    else
      s.last_events.orange_eaten = true;
    const Layout& l = *s.layout;
    auto start = is_blue ? l.blue_start : l.orange_start;
    ghost = GhostState{start.first * 2, start.second * 2, false, 0,
                       Direction::Stop};
    return false;
  }
  s.score -= cfg.loss_penalty;
  s.last_events.score_delta -= cfg.loss_penalty;
  s.last_events.died = true;
  s.status = GameState::Status::Lost;
  return true;
}

bool resolve_all_contacts(GameState& s, const GameConfig& cfg) {
  if (resolve_contact(s, s.blue, true, cfg)) return true;
  if (resolve_contact(s, s.orange, false, cfg)) return true;
  return false;
}

// Movement options for a ghost at a cell center: open directions minus
// the reverse of its heading; the reverse alone at a dead end. Scared
// ghosts may also stay put, and they usually flee: unless panicking they
// avoid options that would step into Pac-man's eating range.
std::vector<Direction> ghost_center_options(const GameState& s,
                                            const GhostState& g, bool panic) {
  const Layout& l = *s.layout;
  int cx = g.x / 2, cy = g.y / 2;
  std::vector<Direction> open;
  for (Direction d : all_directions()) {
    if (d == Direction::Stop) continue;
    if (open_from(l, cx, cy, d)) open.push_back(d);
  }
  if (g.scared) {
    // Fright overrides the no-reverse habit: all open directions plus
    // stop, with suicidal steps filtered out unless panicking.
    std::vector<Direction> out = open;
    out.push_back(Direction::Stop);
    if (!panic) {
      std::vector<Direction> surviving;
      for (Direction d : out) {
        auto [dx, dy] = direction_delta(d);
        if (std::abs(g.x + dx - s.pac_x) >= 2 ||
            std::abs(g.y + dy - s.pac_y) >= 2)
          surviving.push_back(d);
      }
      if (!surviving.empty()) out = std::move(surviving);
    }
    return out;
  }
  Direction rev = reverse_direction(g.heading);
  std::vector<Direction> out;
  for (Direction d : open)
    if (g.heading == Direction::Stop || d != rev) out.push_back(d);
  if (out.empty()) out = open;  // dead end: reversing allowed
  return out;
}

// One unit of ghost movement. At a cell center a direction is chosen;
// between cells the ghost continues its heading.
bool ghost_unit_move(GameState& s, GhostState& g, bool is_blue,
                     std::mt19937_64& rng, const GameConfig& cfg) {
  bool at_center = g.x % 2 == 0 && g.y % 2 == 0;
  Direction d = g.heading;
  if (at_center) {
    std::uniform_real_distribution<double> roll(0.0, 1.0);
    double panic_probability = is_blue ? cfg.blue_panic_probability
                                       : cfg.orange_panic_probability;
    bool panic = g.scared && roll(rng) < panic_probability;
    std::vector<Direction> options = ghost_center_options(s, g, panic);
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    d = options[pick(rng)];
  }
  if (d != Direction::Stop) {
    auto [dx, dy] = direction_delta(d);
    g.x += dx;
    g.y += dy;
    g.heading = d;
  }
  return resolve_contact(s, g, is_blue, cfg);
}

bool move_ghost(GameState& s, GhostState& g, bool is_blue, std::mt19937_64& rng,
                const GameConfig& cfg) {
  // A ghost eaten earlier in this step has just respawned and sits the
  // rest of the step out.
  auto eaten = [&] {
    return is_blue ? s.last_events.blue_eaten : s.last_events.orange_eaten;
  };
  if (eaten()) return false;
  int units = g.scared ? 1 : 2;
  for (int u = 0; u < units; ++u) {
    if (ghost_unit_move(s, g, is_blue, rng, cfg)) return true;
    if (eaten()) break;
  }
  return false;
}

}  // namespace

std::set<Direction> legal_moves(const GameState& state) {
  if (!state.ongoing()) throw IllegalActionError("legal_moves: game over");
  std::set<Direction> out{Direction::Stop};
  auto [cx, cy] = state.pac_cell();
  for (Direction d : all_directions()) {
    if (d == Direction::Stop) continue;
    if (open_from(*state.layout, cx, cy, d)) out.insert(d);
  }
  return out;
}

GameState step(const GameState& state, Direction action, std::mt19937_64& rng,
               const GameConfig& cfg) {
  if (!state.ongoing()) throw IllegalActionError("step: game over");
  if (!legal_moves(state).count(action))
    throw IllegalActionError(std::string("step: illegal action ") +
                             direction_name(action));

  GameState s = state;
  s.last_events = StepEvents{};
  ++s.steps;
  s.score -= cfg.step_penalty;
  s.last_events.score_delta -= cfg.step_penalty;

  // Pac-man moves one cell as two unit moves with contact checks, so
  // that swapping positions with a ghost still registers.
  auto [dx, dy] = direction_delta(action);
  for (int u = 0; u < 2 && action != Direction::Stop; ++u) {
    s.pac_x += dx;
    s.pac_y += dy;
    if (resolve_all_contacts(s, cfg)) return s;
  }

  auto cell = s.pac_cell();
  if (s.pellets.erase(cell)) {
    s.score += cfg.pellet_score;
    s.last_events.score_delta += cfg.pellet_score;
    ++s.last_events.pellets_eaten;
  }
  if (s.power_pellets.erase(cell)) {
    s.score += cfg.power_pellet_score;
    s.last_events.score_delta += cfg.power_pellet_score;
    ++s.last_events.power_pellets_eaten;
    for (GhostState* g : {&s.blue, &s.orange}) {
      g->scared = true;
      g->scared_timer = cfg.scared_duration;
    }
  }
  if (s.pellets.empty()) {
    s.score += cfg.win_bonus;
    s.last_events.score_delta += cfg.win_bonus;
    s.last_events.won = true;
    s.status = GameState::Status::Won;
    return s;
  }

  if (move_ghost(s, s.blue, true, rng, cfg)) return s;
  if (move_ghost(s, s.orange, false, rng, cfg)) return s;

  for (GhostState* g : {&s.blue, &s.orange}) {
    if (g->scared && --g->scared_timer <= 0) {
      g->scared = false;
      g->scared_timer = 0;
      // Between cells when the fright ends: the next move completes the
      // cell transit first (handled by the unit mover).
    }
  }

  if (s.steps >= cfg.max_steps) {
    s.last_events.timed_out = true;
    s.status = GameState::Status::Lost;
  }
  return s;
}

}  // namespace deolog::pacman
