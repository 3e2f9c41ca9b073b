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
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "zeta/automaton.hpp"
#include "zeta/common.hpp"
#include "zeta/games.hpp"

namespace zeta {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// One node of a regular tree graph: a letter with two ordered children or
/// an exit without children.
struct TreeNode {
  std::string id;
  std::variant<Letter, std::string> label;
  std::array<NodeId, 2> children{kNoNode, kNoNode};

  bool is_exit() const { return std::holds_alternative<std::string>(label); }
  const Letter* letter() const { return std::get_if<Letter>(&label); }
  const std::string* exit() const { return std::get_if<std::string>(&label); }
  bool is_bot() const { return letter() && letter()->bot; }
  std::string label_str() const;
};

/// Finite rooted graph denoting a regular binary tree over the gaming
/// alphabet, possibly with exits.
struct RegularTree {
  std::vector<TreeNode> nodes;
  NodeId root = 0;
  Rank rank;

  NodeId add(std::string id, Letter a, NodeId left = kNoNode, NodeId right = kNoNode);
  NodeId add_exit(std::string id, std::string exit);
  void set_children(NodeId n, NodeId left, NodeId right) { nodes[n].children = {left, right}; }
  std::optional<NodeId> find(const std::string& id) const;

  std::size_t size() const { return nodes.size(); }
  const TreeNode& operator[](NodeId n) const { return nodes[n]; }
  NodeId child(NodeId n, int d) const { return nodes[n].children[d]; }
  /// Exit names occurring in the graph.
  std::set<std::string> exits() const;
};

struct TreeDiagnostics {
  bool ok = true;
  std::vector<std::string> problems;
  explicit operator bool() const { return ok; }
};

TreeDiagnostics validate(const RegularTree& t);

/// Depth-bounded prefix of the denoted tree.
struct UnfoldedTree {
  std::string label;
  std::vector<UnfoldedTree> children;
};

UnfoldedTree unfold(const RegularTree& t, unsigned depth);

/// One line per level, each indented by two spaces per level.
std::string render_levels(const UnfoldedTree& u);

/// Positional Even strategy: the chosen direction at every Even node
/// reached by the strategy.
using TreeStrategy = std::map<NodeId, int>;

/// Parity game of a tree: positions are the non-bottom nodes.
struct TreeArena {
  GameArena arena;
  std::vector<Pos> position;  // per node, kNoPos for bottom nodes
  std::vector<NodeId> node;   // per position
};

TreeArena tree_to_arena(const RegularTree& t);

struct TreeSolution {
  Player winner = Player::Odd;
  std::optional<TreeStrategy> strategy;
};

/// A bottom root has no strategy and is reported as won by Odd.
TreeSolution solve_tree(const RegularTree& t);

/// All positional winning Even strategies, in a deterministic order. Throws
/// GuardExceeded beyond 16 reachable Even nodes.
std::vector<TreeStrategy> enumerate_strategies(const RegularTree& t, std::size_t limit);

bool check_strategy(const RegularTree& t, const TreeStrategy& s);

/// Projection onto the shape alphabet: game letters become shape_letter().
RegularTree relabel_shape(const RegularTree& t);

/// Adds an even delta to every game letter priority.
RegularTree shift_priorities(const RegularTree& t, Priority delta);

/// Random valid tree with `size` nodes, deterministic in the seed.
RegularTree random_regular_tree(Rank rank, std::size_t size, const std::vector<std::string>& exits, std::uint64_t seed);

/// The trees of the identity fixpoints: the spine labelled (Even, p) in
/// direction 0 with bottom everywhere else (p = 0 for zeta, 1 for nu).
RegularTree spine_tree(Priority p);

}  // namespace zeta
