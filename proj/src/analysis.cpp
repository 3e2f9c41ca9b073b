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


#include "zeta/analysis.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <random>

namespace zeta {

// ---------------------------------------------------------------------------
// Emptiness

EmptinessGame emptiness_game(const TreeAutomaton& source, std::uint64_t seed) {
  const TreeAutomaton a = compress_priorities(source);
  const auto dims = a.arity();
  const std::vector<Priority> zeros(dims, 0);
  using Kind = EmptinessGame::Kind;

  EmptinessGame g{GameArena(dims), {}, {}};
  std::vector<std::vector<Pos>> succ;
  std::vector<Pos> state_pos(2 * a.num_states(), kNoPos);
  std::deque<Pos> work;

  auto add = [&](Player owner, std::vector<Priority> colors, EmptinessGame::Info info) {
    Pos v = g.arena.add_position(owner, std::move(colors));
    g.info.push_back(std::move(info));
    succ.emplace_back();
    return v;
  };
  auto state = [&](StateId q, bool bot_mode) {
    Pos& v = state_pos[2 * q + bot_mode];
    if (v == kNoPos) {
      auto c = a.colors(q);
      v = add(Player::Even, std::vector<Priority>(c.begin(), c.end()), {Kind::State, q, bot_mode, {}, 0, {}});
      work.push_back(v);
    }
    return v;
  };

  for (StateId q : a.initial()) g.initial.push_back(state(q, false));
  while (!work.empty()) {
    Pos v = work.front();
    work.pop_front();
    const StateId q = g.info[v].state;
    const bool bot_mode = g.info[v].bot_mode;
    if (!bot_mode)
      for (auto& x : a.final_exits(q)) {
        Pos e = add(Player::Odd, zeros, {Kind::Exit, q, false, {}, 0, x});
        succ[v].push_back(e);
      }
    for (auto& mv : a.moves(q)) {
      if (mv.to[0].empty() || mv.to[1].empty()) continue;
      if (bot_mode && !mv.letter.bot) continue;
      Pos l = add(Player::Odd, zeros, {Kind::Letter, q, bot_mode, mv.letter, 0, {}});
      succ[v].push_back(l);
      for (int d = 0; d < 2; ++d) {
        Pos dp = add(Player::Even, zeros, {Kind::Direction, q, bot_mode, mv.letter, d, {}});
        succ[l].push_back(dp);
        for (StateId t : mv.to[d]) {
          Pos next = state(t, bot_mode || mv.letter.bot);
          succ[dp].push_back(next);
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (Pos v = 0; v < succ.size(); ++v) {
    if (seed != 0) std::shuffle(succ[v].begin(), succ[v].end(), rng);
    for (Pos w : succ[v]) g.arena.add_edge(v, w);
  }
  return g;
}

bool is_empty(const TreeAutomaton& a) {
  auto g = emptiness_game(a);
  auto sol = solve(g.arena);
  return std::none_of(g.initial.begin(), g.initial.end(), [&](Pos v) { return sol.winner[v] == Player::Even; });
}

RegularTree minimize(const RegularTree& t) {
  const auto n = t.size();
  std::vector<std::uint32_t> cls(n);
  {
    std::map<std::string, std::uint32_t> by_label;
    for (NodeId v = 0; v < n; ++v) {
      auto [it, _] = by_label.try_emplace(t[v].label_str(), static_cast<std::uint32_t>(by_label.size()));
      cls[v] = it->second;
    }
  }
  for (std::size_t classes = 0;;) {
    std::map<std::array<std::uint32_t, 3>, std::uint32_t> sig;
    std::vector<std::uint32_t> next(n);
    for (NodeId v = 0; v < n; ++v) {
      std::array<std::uint32_t, 3> key{cls[v], kNoNode, kNoNode};
      if (!t[v].is_exit()) key = {cls[v], cls[t.child(v, 0)], cls[t.child(v, 1)]};
      auto [it, _] = sig.try_emplace(key, static_cast<std::uint32_t>(sig.size()));
      next[v] = it->second;
    }
    cls = std::move(next);
    if (sig.size() == classes) break;
    classes = sig.size();
  }
  // Rebuild in breadth-first order from the root for stable output.
  RegularTree out;
  out.rank = t.rank;
  std::map<std::uint32_t, NodeId> made;
  std::vector<NodeId> rep;
  auto node_of = [&](NodeId v) {
    auto [it, inserted] = made.try_emplace(cls[v], static_cast<NodeId>(out.size()));
    if (inserted) {
      std::string id = "n" + std::to_string(out.size());
      if (t[v].is_exit()) out.add_exit(std::move(id), *t[v].exit());
      else out.add(std::move(id), *t[v].letter());
      rep.push_back(v);
    }
    return it->second;
  };
  out.root = node_of(t.root);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    NodeId v = rep[i];
    if (t[v].is_exit()) continue;
    NodeId l = node_of(t.child(v, 0));
    NodeId r = node_of(t.child(v, 1));
    out.set_children(static_cast<NodeId>(i), l, r);
  }
  return out;
}

RegularTree witness(const TreeAutomaton& a, std::uint64_t seed) {
  auto g = emptiness_game(a, seed);
  auto sol = solve(g.arena);
  auto start = std::find_if(g.initial.begin(), g.initial.end(), [&](Pos v) { return sol.winner[v] == Player::Even; });
  if (start == g.initial.end()) throw PreconditionError("witness: the language is empty");
  const Strategy& s = sol.eve;
  using Kind = EmptinessGame::Kind;

  RegularTree t;
  t.rank = a.rank();
  std::map<std::pair<Pos, std::uint32_t>, NodeId> made;
  std::deque<std::pair<Pos, std::uint32_t>> work;
  auto node_of = [&](Pos v, std::uint32_t m) {
    auto [it, inserted] = made.try_emplace({v, m}, static_cast<NodeId>(t.size()));
    if (inserted) {
      t.nodes.push_back({"w" + std::to_string(t.size()), Letter::bottom(), {kNoNode, kNoNode}});
      work.emplace_back(v, m);
    }
    return it->second;
  };
  auto pick = [&](Pos v, std::uint32_t m) {
    Pos c = s.choice(v, m);
    if (c == kNoPos) throw InvariantViolation("witness: strategy undefined on a winning position");
    return c;
  };
  t.root = node_of(*start, s.initial_memory);
  while (!work.empty()) {
    auto [v, m] = work.front();
    work.pop_front();
    NodeId self = made.at({v, m});
    Pos c = pick(v, m);
    std::uint32_t m1 = s.update(v, m);
    const auto& info = g.info[c];
    if (info.kind == Kind::Exit) {
      t.nodes[self].label = info.exit;
      continue;
    }
    t.nodes[self].label = info.letter;
    std::uint32_t m2 = s.update(c, m1);
    for (Pos dp : g.arena.successors(c)) {
      Pos next = pick(dp, m2);
      NodeId child = node_of(next, s.update(dp, m2));
      t.nodes[self].children[g.info[dp].dir] = child;
    }
  }
  return minimize(t);
}

// ---------------------------------------------------------------------------
// Membership

MembershipGame membership_game(const RegularTree& t, const TreeAutomaton& a) {
  if (auto d = validate(t); !d) throw PreconditionError("member: invalid tree: " + d.problems.front());
  for (auto& x : t.exits())
    if (!std::binary_search(a.exits().begin(), a.exits().end(), x))
      throw PreconditionError("member: tree exit '" + x + "' is not an exit of the automaton");
  const auto dims = a.arity();
  const std::vector<Priority> zeros(dims, 0);
  MembershipGame g{GameArena(dims), {}, {}};
  std::map<std::pair<NodeId, StateId>, Pos> ids;
  std::deque<Pos> work;
  auto pos_of = [&](NodeId n, StateId q) {
    auto [it, inserted] = ids.try_emplace({n, q}, 0);
    if (inserted) {
      Player owner = Player::Odd;
      if (auto* x = t[n].exit(); x && !a.is_final(*x, q)) owner = Player::Even;
      auto c = a.colors(q);
      it->second = g.arena.add_position(owner, std::vector<Priority>(c.begin(), c.end()));
      g.at.emplace_back(n, q);
      work.push_back(it->second);
    }
    return it->second;
  };
  for (StateId q : a.initial()) g.roots.push_back(pos_of(t.root, q));
  while (!work.empty()) {
    Pos v = work.front();
    work.pop_front();
    auto [n, q] = g.at[v];
    if (t[n].is_exit()) continue;
    const Letter& l = *t[n].letter();
    for (int d = 0; d < 2; ++d) {
      Pos e = g.arena.add_position(Player::Even, zeros);
      g.at.emplace_back(n, q);
      g.arena.add_edge(v, e);
      for (StateId r : a.targets(q, l, d)) g.arena.add_edge(e, pos_of(t.child(n, d), r));
    }
  }
  return g;
}

bool member(const RegularTree& t, const TreeAutomaton& a) {
  auto g = membership_game(t, a);
  auto sol = solve(g.arena);
  return std::any_of(g.roots.begin(), g.roots.end(), [&](Pos v) { return sol.winner[v] == Player::Even; });
}

// ---------------------------------------------------------------------------
// Classification

namespace {

void require_closed(const Expr& e, const char* op) {
  if (!is_closed(e)) throw PreconditionError(std::string(op) + " requires a closed expression");
}

}  // namespace

TreeAutomaton answerable_automaton(const Expr& e) {
  require_closed(e, "answerable_automaton");
  auto a = compile(e);
  return intersect(a, winner_automaton(Player::Even, a.rank()));
}

std::string ClassLabel::str() const {
  switch (kind) {
    case Kind::Empty:
      return "EMPTY";
    case Kind::Pointed:
      return "POINTED(" + std::to_string(rank.min) + ".." + std::to_string(rank.max) + ")";
    case Kind::Top:
      return "TOP";
  }
  return "?";
}

ClassLabel classify(const Expr& e) {
  require_closed(e, "classify");
  auto a = compile(e);
  ClassLabel out;
  out.rank = a.rank();
  if (is_empty(a)) return out;
  out.in_l = witness(a);
  auto b = intersect(a, winner_automaton(Player::Odd, a.rank()));
  if (is_empty(b)) {
    out.kind = ClassLabel::Kind::Pointed;
    return out;
  }
  out.kind = ClassLabel::Kind::Top;
  out.in_l_minus_w = witness(b);
  return out;
}

std::vector<ClassLabel> classify_batch_serial(const std::vector<Expr>& es) {
  std::vector<ClassLabel> out;
  out.reserve(es.size());
  for (auto& e : es) out.push_back(classify(e));
  return out;
}

std::vector<ClassLabel> classify_batch_parallel(const std::vector<Expr>& es) {
  const auto n = static_cast<long>(es.size());
  std::vector<ClassLabel> out(es.size());
  std::vector<std::exception_ptr> errors(es.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = classify(es[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace zeta
