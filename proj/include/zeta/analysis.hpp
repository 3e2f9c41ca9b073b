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
#include <optional>
#include <string>
#include <vector>

#include "zeta/automaton.hpp"
#include "zeta/expr.hpp"
#include "zeta/games.hpp"
#include "zeta/regtree.hpp"

namespace zeta {

/// Emptiness game of an automaton. Eve, at a state, either stops at a
/// final exit or picks a letter; Adam picks a direction; Eve picks the
/// successor state. After a bottom letter only bottom letters remain
/// available, so every extracted witness is bottom-closed.
struct EmptinessGame {
  enum class Kind : std::uint8_t { State, Exit, Letter, Direction };
  struct Info {
    Kind kind;
    StateId state;
    bool bot_mode;
    Letter letter;
    int dir;
    std::string exit;
  };
  GameArena arena;
  std::vector<Info> info;
  std::vector<Pos> initial;  // state positions of the initial states
};

/// A nonzero seed shuffles the successor order, which yields different
/// (equally valid) winning strategies and therefore different witnesses.
EmptinessGame emptiness_game(const TreeAutomaton& a, std::uint64_t seed = 0);

bool is_empty(const TreeAutomaton& a);

/// Regular tree in the language of a. Throws PreconditionError when the
/// language is empty.
RegularTree witness(const TreeAutomaton& a, std::uint64_t seed = 0);

/// Merges bisimilar nodes (same label, children in the same classes).
RegularTree minimize(const RegularTree& t);

/// Membership game: Adam picks a direction, Eve a successor state.
struct MembershipGame {
  GameArena arena;
  std::vector<std::pair<NodeId, StateId>> at;  // per position, (node, state)
  std::vector<Pos> roots;                      // (root, initial state) positions
};

MembershipGame membership_game(const RegularTree& t, const TreeAutomaton& a);

bool member(const RegularTree& t, const TreeAutomaton& a);

/// Automaton for the game trees of compile(e) that Even wins.
TreeAutomaton answerable_automaton(const Expr& e);

struct ClassLabel {
  enum class Kind : std::uint8_t { Empty, Pointed, Top };
  Kind kind = Kind::Empty;
  Rank rank;
  std::optional<RegularTree> in_l;
  std::optional<RegularTree> in_l_minus_w;

  /// EMPTY, POINTED(i..k) or TOP.
  std::string str() const;
};

ClassLabel classify(const Expr& e);

/// One pipeline per expression. The parallel variant distributes the
/// expressions over OpenMP threads; results are in input order.
std::vector<ClassLabel> classify_batch_serial(const std::vector<Expr>& es);
std::vector<ClassLabel> classify_batch_parallel(const std::vector<Expr>& es);

}  // namespace zeta
