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


#include "zeta/regtree.hpp"

namespace zeta {

TreeArena tree_to_arena(const RegularTree& t) {
  TreeArena out;
  out.position.assign(t.size(), kNoPos);
  for (NodeId n = 0; n < t.size(); ++n) {
    const auto& node = t[n];
    if (node.is_bot()) continue;
    Player owner = node.is_exit() ? Player::Even : node.letter()->player;
    Priority c = node.is_exit() ? 0 : node.letter()->prio;
    out.position[n] = out.arena.add_position(owner, c, node.id);
    out.node.push_back(n);
  }
  for (NodeId n = 0; n < t.size(); ++n) {
    Pos v = out.position[n];
    if (v == kNoPos) continue;
    if (t[n].is_exit()) {
      out.arena.add_edge(v, v);
      continue;
    }
    for (int d = 0; d < 2; ++d)
      if (Pos w = out.position[t.child(n, d)]; w != kNoPos) out.arena.add_edge(v, w);
  }
  return out;
}

TreeSolution solve_tree(const RegularTree& t) {
  TreeSolution out;
  if (t[t.root].is_bot()) return out;
  auto ta = tree_to_arena(t);
  auto sol = solve_parity(ta.arena);
  out.winner = sol.winner[ta.position[t.root]];
  if (out.winner != Player::Even) return out;

  TreeStrategy s;
  std::vector<char> seen(t.size(), 0);
  std::vector<NodeId> work{t.root};
  seen[t.root] = 1;
  while (!work.empty()) {
    NodeId n = work.back();
    work.pop_back();
    if (t[n].is_exit()) continue;
    std::vector<NodeId> next;
    if (t[n].letter()->player == Player::Even) {
      Pos c = sol.eve.choice(ta.position[n], 0);
      if (c == kNoPos) throw InvariantViolation("solve_tree: Even strategy undefined on its region");
      NodeId target = ta.node[c];
      int d = t.child(n, 0) == target ? 0 : 1;
      s[n] = d;
      next.push_back(target);
    } else {
      for (int d = 0; d < 2; ++d)
        if (!t[t.child(n, d)].is_bot()) next.push_back(t.child(n, d));
    }
    for (NodeId c : next)
      if (!seen[c]) {
        seen[c] = 1;
        work.push_back(c);
      }
  }
  out.strategy = std::move(s);
  return out;
}

}  // namespace zeta
