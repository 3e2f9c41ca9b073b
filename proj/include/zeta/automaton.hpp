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

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zeta/common.hpp"
#include "zeta/expr.hpp"

namespace zeta {

/// One symbol of the gaming alphabet: bottom, or a node owned by a player
/// and carrying a priority.
struct Letter {
  bool bot = true;
  Player player = Player::Even;
  Priority prio = 0;

  static Letter bottom() { return {}; }
  static Letter game(Player p, Priority m) { return {false, p, m}; }

  auto operator<=>(const Letter&) const = default;
  std::string str() const;
};

/// Letter used for the live nodes of shape trees (the alphabet {0, 1}
/// maps 1 to this letter and 0 to bottom).
inline Letter shape_letter() { return Letter::game(Player::Even, 0); }

/// Inclusive range of priorities carried by the game letters.
struct Rank {
  Priority min = 0;
  Priority max = 0;
  auto operator<=>(const Rank&) const = default;
};

Rank envelope(Rank a, Rank b);

using StateId = std::uint32_t;

/// Transitions of one state on one letter, per direction.
struct LetterMove {
  Letter letter;
  std::array<std::vector<StateId>, 2> to;
};

/// Nondeterministic parity tree automaton over the gaming alphabet with
/// exits. Acceptance is a conjunction of parity conditions: every state
/// carries one color per condition, and a run is accepting when, on every
/// infinite branch and for every condition, the largest color seen
/// infinitely often is even.
///
/// Values are immutable once built; use TreeAutomaton::Builder.
class TreeAutomaton {
 public:
  class Builder;

  std::size_t num_states() const { return names_.size(); }
  const std::string& state_name(StateId q) const { return names_[q]; }
  std::optional<StateId> find_state(const std::string& name) const;

  const std::vector<StateId>& initial() const { return initial_; }
  bool is_initial(StateId q) const;
  Rank rank() const { return rank_; }
  const std::vector<std::string>& exits() const { return exits_; }

  /// Sorted by letter.
  const std::vector<LetterMove>& moves(StateId q) const { return moves_[q]; }
  std::span<const StateId> targets(StateId q, const Letter& a, int dir) const;

  /// Exits at which a run may stop in state q.
  const std::vector<std::string>& final_exits(StateId q) const { return finals_[q]; }
  bool is_final(const std::string& exit, StateId q) const;
  std::vector<std::pair<std::string, StateId>> finals() const;

  std::size_t arity() const { return arity_; }
  std::span<const Priority> colors(StateId q) const { return colors_[q]; }
  Priority color(StateId q, std::size_t dim = 0) const { return colors_[q][dim]; }
  Priority max_color(std::size_t dim = 0) const;

  std::size_t num_transitions() const;

 private:
  std::vector<std::string> names_;
  std::vector<StateId> initial_;
  Rank rank_;
  std::vector<std::string> exits_;
  std::vector<std::vector<LetterMove>> moves_;
  std::vector<std::vector<std::string>> finals_;
  std::vector<std::vector<Priority>> colors_;
  std::size_t arity_ = 1;
};

class TreeAutomaton::Builder {
 public:
  explicit Builder(Rank rank = {}, std::size_t arity = 1) : rank_(rank), arity_(arity) {}

  StateId add_state(std::string name, std::vector<Priority> colors);
  StateId add_state(std::string name, Priority color) { return add_state(std::move(name), std::vector<Priority>{color}); }
  void add_initial(StateId q) { initial_.insert(q); }
  void add_transition(StateId from, const Letter& a, int dir, StateId to);
  void add_final(const std::string& exit, StateId q);
  void add_exit(const std::string& exit) { exits_.insert(exit); }
  void set_rank(Rank r) { rank_ = r; }
  std::size_t num_states() const { return names_.size(); }

  /// Normalises and checks the invariants. Throws InvariantViolation.
  TreeAutomaton build() const;

 private:
  Rank rank_;
  std::size_t arity_;
  std::vector<std::string> names_;
  std::vector<std::vector<Priority>> colors_;
  std::set<StateId> initial_;
  std::set<std::string> exits_;
  std::map<std::pair<StateId, Letter>, std::array<std::set<StateId>, 2>> moves_;
  std::set<std::pair<std::string, StateId>> finals_;
};

/// Copy of a into a fresh builder, every state renamed with the prefix.
/// Returns the id offset of the copied states.
StateId append_copy(TreeAutomaton::Builder& b, const TreeAutomaton& a, const std::string& prefix);

// ---------------------------------------------------------------------------
// Constructions

/// Accepts exactly the one-node tree labelled by exit x.
TreeAutomaton proj_automaton(const std::string& x);

enum class ConnectiveShape : std::uint8_t { Sum, SumLeft, SumRight, CartProd, ParProd };

/// Finite languages of the connectives with exits "X" (left) and "Y"
/// (right). The root letter has priority 0.
TreeAutomaton connective_automaton(ConnectiveShape op);

/// Plugs bindings[x] into every exit x of a.
TreeAutomaton substitute_language(const TreeAutomaton& a, const std::map<std::string, TreeAutomaton>& bindings);

/// Least fixpoint on exit x. Restarts enter dedicated copies of the initial
/// states whose color is the least odd number above all others, so that a
/// branch can restart only finitely often.
TreeAutomaton fixpoint_mu(const TreeAutomaton& a, const std::string& x);

/// Greatest fixpoints zeta/nu on exit x: a fresh wrapper node labelled
/// (Even, j) with j the even (zeta) or odd (nu) element of {k, k+1}.
TreeAutomaton fixpoint_gamma(const TreeAutomaton& a, const std::string& x, BinderKind kind);

/// Structural compilation of an expression; exits = free variables.
TreeAutomaton compile(const Expr& e);

/// Game trees with letters in `rank` on which `player` has a winning
/// strategy. Exit nodes count as wins for Even.
TreeAutomaton winner_automaton(Player player, Rank rank, const std::vector<std::string>& exits = {});

/// Product automaton with conjunction acceptance (only the part reachable
/// from the initial pairs is built).
TreeAutomaton intersect(const TreeAutomaton& a, const TreeAutomaton& b);

/// Adds an even delta to every letter priority and every color.
TreeAutomaton shift_priorities(const TreeAutomaton& a, Priority delta);

/// Order- and parity-preserving renumbering of the colors onto a minimal
/// range, independently per acceptance dimension.
TreeAutomaton compress_priorities(const TreeAutomaton& a);

/// Letter projection onto the shape alphabet: every game letter becomes
/// shape_letter().
TreeAutomaton relabel_shape(const TreeAutomaton& a);

/// Drops states not reachable from the initial ones.
TreeAutomaton trim(const TreeAutomaton& a);

/// The empty language over the given exits.
TreeAutomaton empty_automaton(Rank rank = {}, std::size_t arity = 1);

/// Maps each color of one dimension to its compressed value.
std::map<Priority, Priority> compress_map(const std::set<Priority>& colors);

}  // namespace zeta
