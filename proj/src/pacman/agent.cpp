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

#include "deolog/pacman/agent.hpp"

#include <deque>
#include <limits>

namespace deolog::pacman {

int pellet_distance(const GameState& state, std::pair<int, int> from_cell) {
  const Layout& l = *state.layout;
  if (state.pellets.count(from_cell)) return 0;
  std::vector<int> dist(static_cast<std::size_t>(l.width) * l.height, -1);
  auto idx = [&](int cx, int cy) {
    return static_cast<std::size_t>(cy) * l.width + cx;
  };
  std::deque<std::pair<int, int>> queue{from_cell};
  dist[idx(from_cell.first, from_cell.second)] = 0;
  while (!queue.empty()) {
    auto [cx, cy] = queue.front();
    queue.pop_front();
    int d = dist[idx(cx, cy)];
    for (Direction dir : all_directions()) {
      if (dir == Direction::Stop) continue;
      auto [dx, dy] = direction_delta(dir);
      int nx = cx + dx, ny = cy + dy;
      if (l.wall(nx, ny) || dist[idx(nx, ny)] >= 0) continue;
      dist[idx(nx, ny)] = d + 1;
      if (state.pellets.count({nx, ny})) return d + 1;
      queue.push_back({nx, ny});
    }
  }
  return -1;
}

Direction scripted_agent(const GameState& state,
                         const std::set<Direction>& allowed) {
  if (allowed.empty()) throw IllegalActionError("scripted_agent: no moves");

  auto landing = [&](Direction d) {
    auto [dx, dy] = direction_delta(d);
    return std::pair<int, int>{state.pac_cell().first + dx,
                               state.pac_cell().second + dy};
  };
  auto near_unscared_ghost = [&](std::pair<int, int> cell) {
    for (const GhostState* g : {&state.blue, &state.orange}) {
      if (g->scared) continue;
      int manhattan =
          std::abs(cell.first * 2 - g->x) + std::abs(cell.second * 2 - g->y);
      if (manhattan < 4) return true;
    }
    return false;
  };

  bool any_safe = false;
  for (Direction d : allowed)
    if (!near_unscared_ghost(landing(d))) {
      any_safe = true;
      break;
    }

  Direction best = *allowed.begin();
  int best_dist = std::numeric_limits<int>::max();
  bool found = false;
  for (Direction d : all_directions()) {  // fixed tie-break order
    if (!allowed.count(d)) continue;
    if (any_safe && near_unscared_ghost(landing(d))) continue;
    int dist = pellet_distance(state, landing(d));
    if (dist < 0) dist = std::numeric_limits<int>::max() - 1;
    if (!found || dist < best_dist) {
      found = true;
      best = d;
      best_dist = dist;
    }
  }
  return best;
}

}  // namespace deolog::pacman
