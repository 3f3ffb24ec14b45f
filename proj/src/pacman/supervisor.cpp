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

#include "deolog/pacman/supervisor.hpp"

#include <map>

#include "deolog/asp/parser.hpp"

namespace deolog::pacman {

const char* norm_base_name(NormBaseKind kind) {
  switch (kind) {
    case NormBaseKind::Vegan: return "vegan";
    case NormBaseKind::Vegetarian: return "vegetarian";
    case NormBaseKind::WeakVegan: return "weak-vegan";
  }
  return "vegan";
}

SupervisorMemory SupervisorMemory::observe(const GameState& state) const {
  SupervisorMemory next = *this;
  bool ate = state.last_events.blue_eaten || state.last_events.orange_eaten;
  next.ate_ghost_last_step = ate;
  if (ate) next.exception_latched = true;
  return next;
}

namespace {

// The three eat-precursor geometries, in doubled coordinates, with
// pacman(A,B) and a scared ghost (C,D,1).
//   case 1: |main| <= 2, |other| <= 1 -> moving toward the ghost is
//           forbidden at level base+2, stopping at level base;
//   case 2: |main| <= 4, |other| <= 1 -> moving toward at base+1;
//   case 3: |main| <= 2, |other| <= 2 -> both corner-ward moves at base+1.
// Each |delta| <= k splits into the two positive-integer orientations.
struct MainAxis {
  const char* toward;      // direction toward the ghost
  const char* delta;       // E = <delta> with E >= 0 along that direction
  const char* shift_a;     // other-axis offset, one orientation
  const char* shift_b;     // and the other
};

const MainAxis kAxes[] = {
    {"east", "C-A", "G=B-D", "G=D-B"},
    {"west", "A-C", "G=B-D", "G=D-B"},
    {"north", "D-B", "G=A-C", "G=C-A"},
    {"south", "B-D", "G=A-C", "G=C-A"},
};

std::string wc_line(const std::string& ghost_pred, const std::string& guard,
                    const std::string& builtins, const std::string& penalized,
                    int level) {
  return ":~ " + guard + "pacman(A,B), " + ghost_pred + "(C,D,1), " + builtins +
         ", -f(" + penalized + "). [1:" + std::to_string(level) + "]\n";
}

// Directional prohibitions protecting one ghost. `base_level` is the
// level of the underlying no-eat norm; `guarded` adds "not exception"
// (weak-vegan orange ghost).
std::string ghost_avoidance_text(const std::string& ghost_pred, int base_level,
                                 bool guarded) {
  std::string guard = guarded ? "not exception, " : "";
  std::string out;
  for (const auto& axis : kAxes) {
    for (const char* shift : {axis.shift_a, axis.shift_b}) {
      std::string near2 =
          std::string("E=") + axis.delta + ", E<=2, " + shift + ", G<=1";
      std::string near4 =
          std::string("E=") + axis.delta + ", E<=4, " + shift + ", G<=1";
      out += wc_line(ghost_pred, guard, near2, axis.toward, base_level + 2);
      out += wc_line(ghost_pred, guard, near2, "stop", base_level);
      out += wc_line(ghost_pred, guard, near4, axis.toward, base_level + 1);
    }
  }
  // Case 3: the ghost strictly around a corner (off both lanes, per the
  // not-on-the-same-path reading); forbid both corner-ward moves.
  struct Quadrant {
    const char* x_dir;
    const char* x_delta;
    const char* y_dir;
    const char* y_delta;
  };
  const Quadrant quadrants[] = {
      {"east", "C-A", "north", "D-B"},
      {"east", "C-A", "south", "B-D"},
      {"west", "A-C", "north", "D-B"},
      {"west", "A-C", "south", "B-D"},
  };
  for (const auto& q : quadrants) {
    std::string body = std::string("E=") + q.x_delta + ", E>=1, E<=2, G=" +
                       q.y_delta + ", G>=1, G<=2";
    out += wc_line(ghost_pred, guard, body, q.x_dir, base_level + 1);
    out += wc_line(ghost_pred, guard, body, q.y_dir, base_level + 1);
  }
  return out;
}

std::string action_scaffolding_text() {
  std::string out;
  const char* dirs[] = {"north", "east", "south", "west", "stop"};
  for (const char* d : dirs) out += std::string("act(") + d + ").\n";
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      out += std::string(":- do(") + dirs[i] + "), do(" + dirs[j] + ").\n";
  // Pac-man always has at least one valid move.
  out += ":- f(north), f(east), f(south), f(west), f(stop).\n";
  return out;
}

asp::Program parse_base(const std::string& text) {
  asp::ParseResult r = asp::parse(text);
  if (!r.ok())
    throw asp::Error("internal: norm base failed to parse: " +
                     r.diagnostics.front().message);
  return std::move(r.program);
}

NormBase build_base(NormBaseKind kind) {
  std::string text;
  switch (kind) {
    case NormBaseKind::Vegan:
      text = ghost_avoidance_text("blueGhost", 2, false) +
             ghost_avoidance_text("orangeGhost", 2, false);
      break;
    case NormBaseKind::Vegetarian:
      text = ghost_avoidance_text("blueGhost", 2, false);
      break;
    case NormBaseKind::WeakVegan:
      // O1 (blue, level 3) > O2 (orange, level 2, until a ghost has been
      // eaten) and O3 (stop for one move after eating, level 2).
      text = ghost_avoidance_text("blueGhost", 3, false) +
             ghost_avoidance_text("orangeGhost", 2, true) +
             ":~ -o(stop), happens(ate_ghost). [1:2]\n";
      break;
  }
  text += action_scaffolding_text();
  return NormBase{kind, parse_base(text)};
}

}  // namespace

const NormBase& NormBase::get(NormBaseKind kind) {
  static const NormBase vegan = build_base(NormBaseKind::Vegan);
  static const NormBase vegetarian = build_base(NormBaseKind::Vegetarian);
  static const NormBase weak_vegan = build_base(NormBaseKind::WeakVegan);
  switch (kind) {
    case NormBaseKind::Vegan: return vegan;
    case NormBaseKind::Vegetarian: return vegetarian;
    case NormBaseKind::WeakVegan: return weak_vegan;
  }
  return vegan;
}

asp::Program state_to_facts(const GameState& state,
                            const SupervisorMemory& memory) {
  using asp::num;
  asp::Program facts;
  auto fact = [&facts](asp::Literal l) {
    asp::Rule r;
    r.head.push_back(std::move(l));
    facts.rules.push_back(std::move(r));
  };
  fact(asp::lit("pacman", {num(state.pac_x), num(state.pac_y)}));
  fact(asp::lit("blueGhost", {num(state.blue.x), num(state.blue.y),
                              num(state.blue.scared ? 1 : 0)}));
  fact(asp::lit("orangeGhost", {num(state.orange.x), num(state.orange.y),
                                num(state.orange.scared ? 1 : 0)}));
  std::set<Direction> legal = legal_moves(state);
  for (Direction d : all_directions())
    if (!legal.count(d)) fact(asp::lit("f", {asp::cst(direction_name(d))}));
  if (memory.ate_ghost_last_step)
    fact(asp::lit("happens", {asp::cst("ate_ghost")}));
  if (memory.exception_latched) fact(asp::lit("exception"));
  return facts;
}

asp::SolveOptions supervisor_options(const Layout& layout) {
  asp::SolveOptions opt;
  opt.ground.maxint = 2 * std::max(layout.width, layout.height) + 4;
  return opt;
}

FilterResult supervisor_filter(const GameState& state, const NormBase& base,
                               const SupervisorMemory& memory) {
  FilterResult result;
  result.memory = memory.observe(state);

  std::set<Direction> legal = legal_moves(state);
  asp::Program facts = state_to_facts(state, result.memory);
  deontic::ClosureResult closure = deontic::deontic_closure(
      base.program, facts, supervisor_options(*state.layout));

  if (closure.inconsistent()) {
    // A shield must not deadlock the game; fail open and flag it.
    result.fail_open = true;
    result.allowed = legal;
    return result;
  }
  result.verdict = closure.verdict;

  for (Direction d : legal) {
    asp::Literal forbidden = asp::lit("f", {asp::cst(direction_name(d))});
    if (!result.verdict.cautiously_holds(forbidden)) result.allowed.insert(d);
  }
  if (base.kind == NormBaseKind::WeakVegan &&
      result.verdict.cautiously_holds(asp::lit("o", {asp::cst("stop")}))) {
    result.forced_stop = true;
    result.allowed = {Direction::Stop};
  }
  if (result.allowed.empty()) {
    result.fail_open = true;
    result.allowed = legal;
  }
  return result;
}

}  // namespace deolog::pacman
