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
#include <deque>
#include <random>
#include <set>

#include "zeta/graph.hpp"
#include "zeta/regtree.hpp"

namespace zeta {

std::string TreeNode::label_str() const {
  if (auto* x = exit()) return "exit " + *x;
  return letter()->str();
}

NodeId RegularTree::add(std::string id, Letter a, NodeId left, NodeId right) {
  nodes.push_back({std::move(id), a, {left, right}});
  return static_cast<NodeId>(nodes.size() - 1);
}

NodeId RegularTree::add_exit(std::string id, std::string exit) {
  nodes.push_back({std::move(id), std::move(exit), {kNoNode, kNoNode}});
  return static_cast<NodeId>(nodes.size() - 1);
}

std::optional<NodeId> RegularTree::find(const std::string& id) const {
  for (NodeId n = 0; n < nodes.size(); ++n)
    if (nodes[n].id == id) return n;
  return std::nullopt;
}

std::set<std::string> RegularTree::exits() const {
  std::set<std::string> out;
  for (auto& n : nodes)
    if (auto* x = n.exit()) out.insert(*x);
  return out;
}

TreeDiagnostics validate(const RegularTree& t) {
  TreeDiagnostics d;
  auto fail = [&](std::string msg) {
    d.ok = false;
    d.problems.push_back(std::move(msg));
  };
  if (t.nodes.empty()) {
    fail("tree has no nodes");
    return d;
  }
  if (t.root >= t.size()) fail("root is not a node");
  if (t.rank.min > t.rank.max) fail("rank min exceeds max");
  std::set<std::string> ids;
  for (auto& n : t.nodes)
    if (!ids.insert(n.id).second) fail("duplicate node id '" + n.id + "'");
  for (auto& n : t.nodes) {
    if (n.is_exit()) {
      if (n.children[0] != kNoNode || n.children[1] != kNoNode) fail("exit node '" + n.id + "' has children");
      continue;
    }
    const Letter& a = *n.letter();
    if (!a.bot && (a.prio < t.rank.min || a.prio > t.rank.max)) fail("node '" + n.id + "' label " + a.str() + " outside rank");
    for (int dir = 0; dir < 2; ++dir) {
      NodeId c = n.children[dir];
      if (c == kNoNode || c >= t.size()) {
        fail("letter node '" + n.id + "' lacks child " + std::to_string(dir));
        continue;
      }
      if (a.bot && !t[c].is_bot()) fail("bottom node '" + n.id + "' has non-bottom child '" + t[c].id + "'");
    }
  }
  return d;
}

UnfoldedTree unfold(const RegularTree& t, unsigned depth) {
  UnfoldedTree u{t[t.root].label_str(), {}};
  struct Frame {
    UnfoldedTree* out;
    NodeId node;
    unsigned depth;
  };
  std::vector<Frame> stack{{&u, t.root, 0}};
  while (!stack.empty()) {
    auto f = stack.back();
    stack.pop_back();
    if (f.depth == depth || t[f.node].is_exit()) continue;
    f.out->children.reserve(2);
    for (int d = 0; d < 2; ++d) f.out->children.push_back({t[t.child(f.node, d)].label_str(), {}});
    for (int d = 0; d < 2; ++d) stack.push_back({&f.out->children[d], t.child(f.node, d), f.depth + 1});
  }
  return u;
}

std::string render_levels(const UnfoldedTree& u) {
  std::string out;
  std::vector<const UnfoldedTree*> level{&u};
  for (unsigned depth = 0; !level.empty(); ++depth) {
    std::vector<const UnfoldedTree*> next;
    out.append(2 * depth, ' ');
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i) out += ' ';
      out += level[i]->label;
      for (auto& c : level[i]->children) next.push_back(&c);
    }
    out += '\n';
    level = std::move(next);
  }
  return out;
}

namespace {

// Nodes reached from the root when Even follows s and Odd plays freely.
// Returns nullopt when the strategy is malformed on the reached part.
struct StrategyGraph {
  Digraph g;  // indexed by node id
  std::vector<NodeId> reached;
  std::optional<NodeId> unassigned;  // first reached Even node without a choice
  bool ok = true;
};

StrategyGraph strategy_graph(const RegularTree& t, const TreeStrategy& s) {
  StrategyGraph out;
  out.g.resize(t.size());
  if (t[t.root].is_bot()) {
    out.ok = false;
    return out;
  }
  std::vector<char> seen(t.size(), 0);
  std::deque<NodeId> work{t.root};
  seen[t.root] = 1;
  while (!work.empty()) {
    NodeId n = work.front();
    work.pop_front();
    out.reached.push_back(n);
    const auto& node = t[n];
    if (node.is_exit()) continue;
    const Letter& a = *node.letter();
    std::vector<NodeId> next;
    if (a.player == Player::Even) {
      auto it = s.find(n);
      if (it == s.end()) {
        if (!out.unassigned) out.unassigned = n;
        continue;
      }
      NodeId c = t.child(n, it->second);
      if (t[c].is_bot()) {
        out.ok = false;
        return out;
      }
      next.push_back(c);
    } else {
      for (int d = 0; d < 2; ++d)
        if (!t[t.child(n, d)].is_bot()) next.push_back(t.child(n, d));
    }
    for (NodeId c : next) {
      if (std::find(out.g[n].begin(), out.g[n].end(), c) == out.g[n].end()) out.g[n].push_back(c);
      if (!seen[c]) {
        seen[c] = 1;
        work.push_back(c);
      }
    }
  }
  return out;
}

bool cycles_even(const RegularTree& t, const StrategyGraph& sg) {
  auto prio = [&](NodeId n) { return t[n].is_exit() ? Priority{0} : t[n].letter()->prio; };
  std::set<Priority> odd;
  for (NodeId n : sg.reached)
    if (prio(n) % 2 == 1) odd.insert(prio(n));
  for (Priority p : odd) {
    std::vector<std::uint32_t> below;
    for (NodeId n : sg.reached)
      if (prio(n) <= p) below.push_back(n);
    for (auto& comp : strongly_connected(sg.g, below))
      if (is_cyclic(sg.g, comp))
        for (NodeId n : comp)
          if (prio(n) == p) return false;
  }
  return true;
}

}  // namespace

bool check_strategy(const RegularTree& t, const TreeStrategy& s) {
  auto sg = strategy_graph(t, s);
  return sg.ok && !sg.unassigned && cycles_even(t, sg);
}

std::vector<TreeStrategy> enumerate_strategies(const RegularTree& t, std::size_t limit) {
  std::vector<TreeStrategy> out;
  if (t[t.root].is_bot()) return out;
  {
    std::vector<char> seen(t.size(), 0);
    std::vector<NodeId> order{t.root};
    seen[t.root] = 1;
    std::size_t even = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& node = t[order[i]];
      if (node.is_exit() || node.is_bot()) continue;
      if (node.letter()->player == Player::Even) ++even;
      for (NodeId c : node.children)
        if (!seen[c]) {
          seen[c] = 1;
          order.push_back(c);
        }
    }
    if (even > 16) throw GuardExceeded("enumerate_strategies: more than 16 reachable Even nodes");
  }
  TreeStrategy s;
  auto rec = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    auto sg = strategy_graph(t, s);
    if (!sg.ok) return;
    if (!sg.unassigned) {
      if (cycles_even(t, sg)) out.push_back(s);
      return;
    }
    NodeId n = *sg.unassigned;
    for (int d = 0; d < 2; ++d) {
      if (t[t.child(n, d)].is_bot()) continue;
      s[n] = d;
      self(self);
      s.erase(n);
    }
  };
  rec(rec);
  return out;
}

RegularTree relabel_shape(const RegularTree& t) {
  RegularTree out = t;
  out.rank = {0, 0};
  for (auto& n : out.nodes)
    if (auto* a = std::get_if<Letter>(&n.label); a && !a->bot) *a = shape_letter();
  return out;
}

RegularTree shift_priorities(const RegularTree& t, Priority delta) {
  if (delta % 2 != 0) throw PreconditionError("shift_priorities: delta must be even");
  RegularTree out = t;
  out.rank = {t.rank.min + delta, t.rank.max + delta};
  for (auto& n : out.nodes)
    if (auto* a = std::get_if<Letter>(&n.label); a && !a->bot) a->prio += delta;
  return out;
}

RegularTree random_regular_tree(Rank rank, std::size_t size, const std::vector<std::string>& exits, std::uint64_t seed) {
  if (size == 0) throw PreconditionError("random_regular_tree: size must be positive");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  RegularTree t;
  t.rank = rank;
  // 0 = bottom, 1 = exit, 2 = game letter
  std::vector<int> kind(size);
  for (auto& k : kind) {
    auto r = pick(10);
    k = r < 2 ? 0 : (r < 3 && !exits.empty()) ? 1 : 2;
  }
  std::vector<NodeId> bots;
  for (std::size_t i = 0; i < size; ++i)
    if (kind[i] == 0) bots.push_back(static_cast<NodeId>(i));
  for (std::size_t i = 0; i < size; ++i) {
    std::string id = "n" + std::to_string(i);
    if (kind[i] == 0) {
      t.add(std::move(id), Letter::bottom());
    } else if (kind[i] == 1) {
      t.add_exit(std::move(id), exits[pick(exits.size())]);
    } else {
      Player p = pick(2) ? Player::Odd : Player::Even;
      auto m = static_cast<Priority>(rank.min + pick(rank.max - rank.min + 1));
      t.add(std::move(id), Letter::game(p, m));
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (kind[i] == 1) continue;
    for (int d = 0; d < 2; ++d)
      t.nodes[i].children[d] = kind[i] == 0 ? bots[pick(bots.size())] : static_cast<NodeId>(pick(size));
  }
  return t;
}

RegularTree spine_tree(Priority p) {
  RegularTree t;
  t.rank = {0, p};
  NodeId spine = t.add("n0", Letter::game(Player::Even, p));
  NodeId bot = t.add("bot", Letter::bottom());
  t.set_children(spine, spine, bot);
  t.set_children(bot, bot, bot);
  return t;
}

}  // namespace zeta
