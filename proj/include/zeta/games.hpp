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

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeta/common.hpp"

namespace zeta {

using Pos = std::uint32_t;
inline constexpr Pos kNoPos = std::numeric_limits<Pos>::max();

/// Finite two-player game graph. Player::Even is Eve, Player::Odd is Adam.
/// Every position carries one color per objective dimension; Eve wins a
/// play when every dimension has an even limsup. A position without
/// successors is lost by its owner.
class GameArena {
 public:
  explicit GameArena(std::size_t dims = 1) : dims_(dims) {}

  Pos add_position(Player owner, std::vector<Priority> colors, std::string label = {});
  Pos add_position(Player owner, Priority color, std::string label = {}) {
    return add_position(owner, std::vector<Priority>{color}, std::move(label));
  }
  /// Duplicate edges are ignored.
  void add_edge(Pos from, Pos to);

  std::size_t size() const { return owner_.size(); }
  std::size_t dims() const { return dims_; }
  Player owner(Pos v) const { return owner_[v]; }
  std::span<const Priority> colors(Pos v) const { return {colors_.data() + v * dims_, dims_}; }
  Priority color(Pos v, std::size_t dim = 0) const { return colors_[v * dims_ + dim]; }
  const std::vector<Pos>& successors(Pos v) const { return succ_[v]; }
  const std::string& label(Pos v) const { return label_[v]; }
  std::size_t num_edges() const;

  /// Owners swapped and every color raised by one.
  GameArena dual() const;

 private:
  std::size_t dims_;
  std::vector<Player> owner_;
  std::vector<Priority> colors_;
  std::vector<std::vector<Pos>> succ_;
  std::vector<std::string> label_;
};

/// Finite-memory strategy. At (v, m) with v owned by `owner` the play moves
/// to choice(v, m); at every position the memory then becomes
/// update(v, m). Positional strategies have a single memory value.
struct Strategy {
  Player owner = Player::Even;
  std::uint32_t memory_size = 1;
  std::uint32_t initial_memory = 0;
  std::vector<Pos> move;                // size() * memory_size, kNoPos when undefined
  std::vector<std::uint32_t> next_mem;  // empty for positional strategies

  static Strategy positional(Player owner, std::vector<Pos> choice);

  Pos choice(Pos v, std::uint32_t m) const { return move[static_cast<std::size_t>(v) * memory_size + m]; }
  std::uint32_t update(Pos v, std::uint32_t m) const {
    return next_mem.empty() ? 0 : next_mem[static_cast<std::size_t>(v) * memory_size + m];
  }
  bool is_positional() const { return memory_size == 1; }
};

struct Solution {
  std::vector<Player> winner;
  Strategy eve;
  Strategy adam;

  std::vector<Pos> region(Player p) const;
};

/// Recursive (Zielonka) solver for max-parity games. Requires dims() == 1.
/// Both strategies are positional and winning on the respective regions.
Solution solve_parity(const GameArena& arena);

/// Conjunction of parity objectives. Reduced to one parity condition with
/// an index appearance record over the Streett pairs of all dimensions.
/// Strategies carry the record as memory. Throws GuardExceeded when the
/// product would exceed `max_product` positions.
Solution solve_conjunction(const GameArena& arena, std::size_t max_product = 4'000'000);

/// solve_parity for one dimension, solve_conjunction otherwise.
Solution solve(const GameArena& arena);

struct Verdict {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Checks that s wins from every position of `from` (with the initial
/// memory). For Eve: all reachable cycles of the restricted product are
/// even in every dimension and no reachable dead end is hers. For Adam: no
/// reachable strongly connected part is even in every dimension and no
/// reachable dead end is his.
Verdict verify_strategy(const GameArena& arena, const Strategy& s, std::span<const Pos> from);

}  // namespace zeta
