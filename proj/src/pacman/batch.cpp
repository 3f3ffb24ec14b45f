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

#include "deolog/pacman/batch.hpp"

#include <chrono>
#include <ostream>

#include "deolog/pacman/agent.hpp"

namespace deolog::pacman {

int BatchResult::total_unforced_protected_eats() const {
  int total = 0;
  for (const auto& g : games) total += g.unforced_protected_eats;
  return total;
}

int BatchResult::total_post_eat_stop_violations() const {
  int total = 0;
  for (const auto& g : games) total += g.post_eat_stop_violations;
  return total;
}

bool geometry_danger(int pac_x, int pac_y, int gx, int gy, Direction move) {
  int dx = gx - pac_x;
  int dy = gy - pac_y;
  auto toward_x = [&](int bound) {
    if (std::abs(dy) > 1) return false;
    if (std::abs(dx) > bound) return false;
    return (move == Direction::East && dx >= 0) ||
           (move == Direction::West && dx <= 0);
  };
  auto toward_y = [&](int bound) {
    if (std::abs(dx) > 1) return false;
    if (std::abs(dy) > bound) return false;
    return (move == Direction::North && dy >= 0) ||
           (move == Direction::South && dy <= 0);
  };
  // Case 1: adjacent lane; moving toward the ghost or stopping.
  if (move == Direction::Stop)
    return (std::abs(dx) <= 2 && std::abs(dy) <= 1) ||
           (std::abs(dy) <= 2 && std::abs(dx) <= 1);
  if (toward_x(2) || toward_y(2)) return true;
  // Case 2: same lane, up to two cells away.
  if (toward_x(4) || toward_y(4)) return true;
  // Case 3: strictly around a corner (off both lanes).
  if (std::abs(dx) >= 1 && std::abs(dx) <= 2 && std::abs(dy) >= 1 &&
      std::abs(dy) <= 2) {
    if ((move == Direction::East && dx > 0) ||
        (move == Direction::West && dx < 0) ||
        (move == Direction::North && dy > 0) ||
        (move == Direction::South && dy < 0))
      return true;
  }
  return false;
}

namespace {

// Ghosts whose consumption the norm base forbids in the given memory
// state. Weak vegan: blue always, orange only before the exception.
std::vector<const GhostState*> protected_ghosts(NormBaseKind kind,
                                                const GameState& s,
                                                const SupervisorMemory& m) {
  switch (kind) {
    case NormBaseKind::Vegan: return {&s.blue, &s.orange};
    case NormBaseKind::Vegetarian: return {&s.blue};
    case NormBaseKind::WeakVegan:
      if (m.exception_latched) return {&s.blue};
      return {&s.blue, &s.orange};
  }
  return {};
}

bool every_legal_move_dangerous(const GameState& s,
                                const std::vector<const GhostState*>& ghosts) {
  for (Direction d : legal_moves(s)) {
    bool dangerous = false;
    for (const GhostState* g : ghosts)
      if (g->scared && geometry_danger(s.pac_x, s.pac_y, g->x, g->y, d)) {
        dangerous = true;
        break;
      }
    if (!dangerous) return false;
  }
  return true;
}

void write_trace(std::ostream& out, int game, const GameState& s,
                 Direction action, const FilterResult& filter) {
  out << "game=" << game << " step=" << s.steps << " pacman=(" << s.pac_x
      << "," << s.pac_y << ")"
      << " blue=(" << s.blue.x << "," << s.blue.y << "," << s.blue.scared
      << ")"
      << " orange=(" << s.orange.x << "," << s.orange.y << ","
      << s.orange.scared << ")"
      << " action=" << direction_name(action) << " allowed={";
  bool first = true;
  for (Direction d : filter.allowed) {
    if (!first) out << ",";
    first = false;
    out << direction_name(d);
  }
  out << "} score=" << s.score;
  if (filter.forced_stop) out << " forced_stop";
  if (filter.fail_open) out << " fail_open";
  out << "\n";
}

GameRecord play_game(NormBaseKind kind, int index, uint64_t seed,
                     const Layout& layout, const GameConfig& cfg,
                     std::ostream* trace) {
  auto t0 = std::chrono::steady_clock::now();
  GameRecord record;
  record.index = index;

  std::mt19937_64 rng(seed);
  const NormBase& base = NormBase::get(kind);
  GameState state = GameState::initial(layout);
  SupervisorMemory memory;
  bool must_stop_next = false;

  while (state.ongoing()) {
    FilterResult filter = supervisor_filter(state, base, memory);
    memory = filter.memory;
    if (filter.fail_open) ++record.fail_open_incidents;

    Direction action = scripted_agent(state, filter.allowed);
    if (kind == NormBaseKind::WeakVegan && must_stop_next &&
        action != Direction::Stop)
      ++record.post_eat_stop_violations;

    // Audit data gathered before the step resolves.
    auto ghosts = protected_ghosts(kind, state, memory);
    bool forced = every_legal_move_dangerous(state, ghosts);
    bool blue_was_scared = state.blue.scared;
    bool orange_was_scared = state.orange.scared;
    bool blue_protected = false, orange_protected = false;
    for (const GhostState* g : ghosts) {
      if (g == &state.blue) blue_protected = true;
      if (g == &state.orange) orange_protected = true;
    }

    state = step(state, action, rng, cfg);
    if (trace) write_trace(*trace, index, state, action, filter);

    if (state.last_events.blue_eaten) {
      ++record.blue_eaten;
      // A fresh scare (unscared before the step) is the power-pellet
      // precursor the shield cannot see; otherwise the state must have
      // been forced.
      if (blue_protected && blue_was_scared && !forced)
        ++record.unforced_protected_eats;
    }
    if (state.last_events.orange_eaten) {
      ++record.orange_eaten;
      if (orange_protected && orange_was_scared && !forced)
        ++record.unforced_protected_eats;
    }
    must_stop_next =
        state.last_events.blue_eaten || state.last_events.orange_eaten;
  }

  record.score = state.score;
  record.won = state.status == GameState::Status::Won;
  record.steps = state.steps;
  record.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return record;
}

}  // namespace

BatchResult run_games(NormBaseKind kind, int n, uint64_t seed,
                      const Layout& layout, const GameConfig& config,
                      std::ostream* trace) {
  if (n < 1) throw asp::Error("run_games: need at least one game");
  BatchResult result;
  for (int i = 0; i < n; ++i) {
    // splitmix64 over (seed, index) decorrelates per-game streams.
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<uint64_t>(i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    result.games.push_back(play_game(kind, i, z, layout, config, trace));
  }

  RunStats& s = result.stats;
  s.games = n;
  s.max_score = result.games.front().score;
  double score_sum = 0, blue_sum = 0, orange_sum = 0, secs_sum = 0;
  for (const auto& g : result.games) {
    if (g.won) ++s.wins;
    score_sum += static_cast<double>(g.score);
    s.max_score = std::max(s.max_score, g.score);
    blue_sum += g.blue_eaten;
    orange_sum += g.orange_eaten;
    secs_sum += g.seconds;
  }
  s.avg_score = score_sum / n;
  s.avg_blue_eaten = blue_sum / n;
  s.avg_orange_eaten = orange_sum / n;
  s.avg_seconds = secs_sum / n;
  return result;
}

}  // namespace deolog::pacman
