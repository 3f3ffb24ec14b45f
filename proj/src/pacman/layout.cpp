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

#include <sstream>

#include "deolog/pacman/game.hpp"

namespace deolog::pacman {

namespace {

constexpr const char* kClassicLayout =
    "%%%%%%%%%%%%%%%%%%%%\n"
    "%......%B  O%......%\n"
    "%%%%...%%  %%...%%%%\n"
    "%.%..%o......o%..%.%\n"
    "%.%%.%.%%%%%%.%.%%.%\n"
    "%........P.........%\n"
    "%%%%%%%%%%%%%%%%%%%%\n";

}  // namespace

Layout Layout::parse(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  if (rows.empty()) throw asp::Error("layout: empty grid");

  Layout out;
  out.height = static_cast<int>(rows.size());
  out.width = static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != out.width)
      throw asp::Error("layout: ragged rows");
  out.wall_grid.assign(static_cast<std::size_t>(out.width) * out.height, 0);

  bool have_pacman = false, have_blue = false, have_orange = false;
  for (int row = 0; row < out.height; ++row) {
    int cy = out.height - 1 - row;  // text rows top-down, cy northward
    for (int cx = 0; cx < out.width; ++cx) {
      char c = rows[row][cx];
      switch (c) {
        case '%':
          out.wall_grid[static_cast<std::size_t>(cy) * out.width + cx] = 1;
          break;
        case '.': out.pellets.insert({cx, cy}); break;
        case 'o': out.power_pellets.insert({cx, cy}); break;
        case 'P':
          out.pacman_start = {cx, cy};
          have_pacman = true;
          break;
        case 'B':
          out.blue_start = {cx, cy};
          have_blue = true;
          break;
        case 'O':
          out.orange_start = {cx, cy};
          have_orange = true;
          break;
        case ' ': break;
        default:
          throw asp::Error(std::string("layout: unexpected character '") + c +
                           "'");
      }
    }
  }
  if (!have_pacman) throw asp::Error("layout: missing Pac-man start 'P'");
  if (!have_blue || !have_orange)
    throw asp::Error("layout: missing ghost starts 'B'/'O'");
  auto open = [&](std::pair<int, int> cell) {
    return !out.wall(cell.first, cell.second);
  };
  if (!open(out.pacman_start) || !open(out.blue_start) ||
      !open(out.orange_start))
    throw asp::Error("layout: agent start inside a wall");
  for (const auto& p : out.pellets)
    if (!open(p)) throw asp::Error("layout: pellet inside a wall");
  for (const auto& p : out.power_pellets)
    if (!open(p)) throw asp::Error("layout: power pellet inside a wall");
  return out;
}

const Layout& Layout::classic() {
  static const Layout layout = Layout::parse(kClassicLayout);
  return layout;
}

}  // namespace deolog::pacman
