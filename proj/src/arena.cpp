/*
 * Copyright 2026 The zeta-arena Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <algorithm>

#include "zeta/games.hpp"

namespace zeta {

Pos GameArena::add_position(Player owner, std::vector<Priority> colors, std::string label) {
  if (colors.size() != dims_)
    throw InvariantViolation("position has " + std::to_string(colors.size()) + " colors, arena has " +
                             std::to_string(dims_) + " dimensions");
  auto v = static_cast<Pos>(owner_.size());
  owner_.push_back(owner);
  colors_.insert(colors_.end(), colors.begin(), colors.end());
  succ_.emplace_back();
  label_.push_back(std::move(label));
  return v;
}

void GameArena::add_edge(Pos from, Pos to) {
  if (from >= size() || to >= size()) throw InvariantViolation("edge endpoint out of range");
  auto& s = succ_[from];
  if (std::find(s.begin(), s.end(), to) == s.end()) s.push_back(to);
}

std::size_t GameArena::num_edges() const {
  std::size_t n = 0;
  for (auto& s : succ_) n += s.size();
  return n;
}

GameArena GameArena::dual() const {
  GameArena d(dims_);
  for (Pos v = 0; v < size(); ++v) {
    std::vector<Priority> c(colors(v).begin(), colors(v).end());
    for (auto& x : c) ++x;
    d.add_position(opponent(owner_[v]), std::move(c), label_[v]);
  }
  d.succ_ = succ_;
  return d;
}

Strategy Strategy::positional(Player owner, std::vector<Pos> choice) {
  Strategy s;
  s.owner = owner;
  s.move = std::move(choice);
  return s;
}

std::vector<Pos> Solution::region(Player p) const {
  std::vector<Pos> out;
  for (Pos v = 0; v < winner.size(); ++v)
    if (winner[v] == p) out.push_back(v);
  return out;
}

}  // namespace zeta
