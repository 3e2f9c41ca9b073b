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


#include "zeta/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace zeta::oracle {

namespace {

using Mask = std::uint32_t;

// Mixed-radix counter over the choices of the positions in `who`.
struct Choices {
  std::vector<Pos> who;
  std::vector<std::size_t> digit;
  const GameArena* g;

  Choices(const GameArena& arena, Player p) : g(&arena) {
    for (Pos v = 0; v < arena.size(); ++v)
      if (arena.owner(v) == p && !arena.successors(v).empty()) who.push_back(v);
    digit.assign(who.size(), 0);
  }
  bool next() {
    for (std::size_t i = 0; i < who.size(); ++i) {
      if (++digit[i] < g->successors(who[i]).size()) return true;
      digit[i] = 0;
    }
    return false;
  }
  // Successor masks of the graph where `who` follow the current choice.
  std::vector<Mask> graph() const {
    std::vector<Mask> out(g->size(), 0);
    for (Pos v = 0; v < g->size(); ++v)
      for (Pos w : g->successors(v)) out[v] |= Mask{1} << w;
    for (std::size_t i = 0; i < who.size(); ++i) out[who[i]] = Mask{1} << g->successors(who[i])[digit[i]];
    return out;
  }
};

Mask reach(const std::vector<Mask>& succ, Mask from, Mask within) {
  Mask seen = from & within;
  for (Mask frontier = seen; frontier;) {
    Mask next = 0;
    for (std::size_t v = 0; v < succ.size(); ++v)
      if (frontier >> v & 1) next |= succ[v];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool on_cycle(const std::vector<Mask>& succ, Pos u, Mask within) {
  return (reach(succ, succ[u] & within, within) >> u) & 1;
}

// Player p wins every play from v in the graph `succ` (p already fixed its
// choices, the opponent is free).
bool wins_everything(const GameArena& g, const std::vector<Mask>& succ, Player p, Pos v) {
  const Mask all = (Mask{1} << g.size()) - 1;
  Mask r = reach(succ, Mask{1} << v, all);
  for (Pos u = 0; u < g.size(); ++u) {
    if (!(r >> u & 1)) continue;
    if (succ[u] == 0 && g.owner(u) == p) return false;
    Priority c = g.color(u);
    bool bad = (c % 2 == 1) == (p == Player::Even);
    if (!bad) continue;
    Mask below = 0;
    for (Pos w = 0; w < g.size(); ++w)
      if ((r >> w & 1) && g.color(w) <= c) below |= Mask{1} << w;
    if (on_cycle(succ, u, below)) return false;
  }
  return true;
}

}  // namespace

std::vector<Player> brute_solve_parity(const GameArena& g) {
  if (g.size() > 8) throw GuardExceeded("brute_solve_parity: more than 8 positions");
  if (g.dims() != 1) throw PreconditionError("brute_solve_parity: one dimension only");
  std::vector<char> eve(g.size(), 0), adam(g.size(), 0);
  for (Player p : {Player::Even, Player::Odd}) {
    auto& win = p == Player::Even ? eve : adam;
    Choices ch(g, p);
    do {
      auto succ = ch.graph();
      for (Pos v = 0; v < g.size(); ++v)
        if (!win[v] && wins_everything(g, succ, p, v)) win[v] = 1;
    } while (ch.next());
  }
  std::vector<Player> out(g.size());
  for (Pos v = 0; v < g.size(); ++v) {
    if (eve[v] == adam[v]) throw InvariantViolation("brute_solve_parity: regions do not partition the arena");
    out[v] = eve[v] ? Player::Even : Player::Odd;
  }
  return out;
}

std::vector<Player> brute_solve_conjunction(const GameArena& g) {
  if (g.size() > 6) throw GuardExceeded("brute_solve_conjunction: more than 6 positions");
  if (g.dims() < 1 || g.dims() > 2) throw PreconditionError("brute_solve_conjunction: one or two dimensions");
  const auto n = g.size();
  const Mask all = (Mask{1} << n) - 1;

  // Nonempty sets whose colors are even at the maximum in every dimension.
  std::vector<Mask> good_sets;
  for (Mask s = 1; s <= all; ++s) {
    bool good = true;
    for (std::size_t d = 0; d < g.dims() && good; ++d) {
      Priority m = 0;
      for (Pos v = 0; v < n; ++v)
        if (s >> v & 1) m = std::max(m, g.color(v, d));
      good = m % 2 == 0;
    }
    if (good) good_sets.push_back(s);
  }
  auto strongly_connected = [&](const std::vector<Mask>& succ, Mask s) {
    for (Pos v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      // every member reaches every member, through a nonempty path
      if ((reach(succ, succ[v] & s, s) & s) != s) return false;
    }
    return true;
  };

  std::vector<char> adam(n, 0);
  Choices ch(g, Player::Odd);
  do {
    auto succ = ch.graph();
    for (Pos v = 0; v < n; ++v) {
      if (adam[v]) continue;
      Mask r = reach(succ, Mask{1} << v, all);
      bool eve_wins = false;
      for (Pos u = 0; u < n && !eve_wins; ++u)
        if ((r >> u & 1) && succ[u] == 0 && g.owner(u) == Player::Odd) eve_wins = true;
      for (Mask s : good_sets) {
        if (eve_wins) break;
        if ((s & r) == s && strongly_connected(succ, s)) eve_wins = true;
      }
      if (!eve_wins) adam[v] = 1;
    }
  } while (ch.next());
  std::vector<Player> out(n);
  for (Pos v = 0; v < n; ++v) out[v] = adam[v] ? Player::Odd : Player::Even;
  return out;
}

bool brute_member(const RegularTree& t, const TreeAutomaton& a) {
  if (a.arity() != 1) throw PreconditionError("brute_member: plain parity automata only");
  if (auto d = validate(t); !d) throw PreconditionError("brute_member: invalid tree");

  // Reachable (node, state) pairs of the membership game.
  std::map<std::pair<NodeId, StateId>, std::uint32_t> id;
  std::vector<std::pair<NodeId, StateId>> pairs;
  auto intern = [&](NodeId n, StateId q) {
    auto [it, inserted] = id.try_emplace({n, q}, static_cast<std::uint32_t>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(n, q);
      if (pairs.size() > 64) throw GuardExceeded("brute_member: more than 64 reachable pairs");
    }
    return it->second;
  };
  for (StateId q : a.initial()) intern(t.root, q);
  // options[p][d]: Eve's successor pairs after Adam picks d at pair p.
  std::vector<std::array<std::vector<std::uint32_t>, 2>> options;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [n, q] = pairs[i];
    options.emplace_back();
    if (t[n].is_exit()) continue;
    for (int d = 0; d < 2; ++d)
      for (StateId r : a.targets(q, *t[n].letter(), d)) {
        auto j = intern(t.child(n, d), r);
        options[i][d].push_back(j);
      }
  }

  const auto P = pairs.size();
  auto color = [&](std::uint32_t i) { return a.color(pairs[i].second); };
  auto is_exit = [&](std::uint32_t i) { return t[pairs[i].first].is_exit(); };
  auto accepting_exit = [&](std::uint32_t i) { return a.is_final(*t[pairs[i].first].exit(), pairs[i].second); };

  // choice[i][d] = index into options[i][d], or -1 when not yet fixed.
  std::vector<std::array<int, 2>> choice(P, {-1, -1});

  // Explores the pairs reached under the current partial choice. Returns
  // false when the partial choice already loses; otherwise sets `open` to
  // the first reached undecided (pair, direction), if any.
  auto explore = [&](std::uint32_t start, std::optional<std::pair<std::uint32_t, int>>& open) {
    open.reset();
    std::vector<std::vector<std::uint32_t>> succ(P);
    std::vector<char> seen(P, 0);
    std::vector<std::uint32_t> order{start};
    seen[start] = 1;
    for (std::size_t k = 0; k < order.size(); ++k) {
      auto i = order[k];
      if (is_exit(i)) {
        if (!accepting_exit(i)) return false;
        continue;
      }
      for (int d = 0; d < 2; ++d) {
        if (options[i][d].empty()) return false;
        if (choice[i][d] < 0) {
          if (!open) open = std::make_pair(i, d);
          continue;
        }
        auto j = options[i][d][choice[i][d]];
        succ[i].push_back(j);
        if (!seen[j]) {
          seen[j] = 1;
          order.push_back(j);
        }
      }
    }
    // A cycle whose maximal color is odd is fatal for every completion.
    for (auto u : order) {
      Priority c = color(u);
      if (c % 2 == 0) continue;
      std::vector<char> in(P, 0);
      for (auto w : order)
        if (color(w) <= c) in[w] = 1;
      std::vector<char> vis(P, 0);
      std::vector<std::uint32_t> stack;
      for (auto w : succ[u])
        if (in[w] && !vis[w]) {
          vis[w] = 1;
          stack.push_back(w);
        }
      while (!stack.empty()) {
        auto w = stack.back();
        stack.pop_back();
        if (w == u) return false;
        for (auto x : succ[w])
          if (in[x] && !vis[x]) {
            vis[x] = 1;
            stack.push_back(x);
          }
      }
    }
    return true;
  };

  std::function<bool(std::uint32_t)> search = [&](std::uint32_t start) {
    std::optional<std::pair<std::uint32_t, int>> open;
    if (!explore(start, open)) return false;
    if (!open) return true;
    auto [i, d] = *open;
    for (int k = 0; k < static_cast<int>(options[i][d].size()); ++k) {
      choice[i][d] = k;
      if (search(start)) return true;
    }
    choice[i][d] = -1;
    return false;
  };

  for (StateId q : a.initial()) {
    for (auto& c : choice) c = {-1, -1};
    if (search(id.at({t.root, q}))) return true;
  }
  return false;
}

Expr random_expr(unsigned depth, const std::vector<std::string>& vars, std::uint64_t seed) {
  if (depth == 0) throw PreconditionError("random_expr: depth must be at least 1");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  unsigned fresh = 0;
  auto name = [&] { return "V" + std::to_string(fresh++); };
  auto constant = [&]() {
    std::string x = name();
    BinderKind k = std::array{BinderKind::Mu, BinderKind::Zeta, BinderKind::Nu}[pick(3)];
    return Expr::binder(k, x, Expr::var(x));
  };
  std::function<Expr(unsigned, std::vector<std::string>&)> gen = [&](unsigned d, std::vector<std::string>& scope) {
    if (d <= 1) {
      if (!scope.empty() && pick(2) == 0) return Expr::var(scope[pick(scope.size())]);
      return constant();
    }
    auto r = pick(6);
    if (r < 3) {
      std::string x = name();
      scope.push_back(x);
      Expr body = gen(d - 1, scope);
      scope.pop_back();
      return Expr::binder(static_cast<BinderKind>(r), x, body);
    }
    Expr l = gen(d - 1, scope);
    Expr rr = gen(1 + static_cast<unsigned>(pick(d - 1)), scope);
    return Expr::binary(static_cast<ConnectiveKind>(r - 3), l, rr);
  };
  std::vector<std::string> scope = vars;
  return gen(depth, scope);
}

GameArena random_arena(std::size_t positions, std::size_t dims, Priority max_color, std::size_t max_degree,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  GameArena g(dims);
  for (std::size_t v = 0; v < positions; ++v) {
    std::vector<Priority> c(dims);
    for (auto& x : c) x = static_cast<Priority>(pick(max_color + 1));
    g.add_position(pick(2) ? Player::Odd : Player::Even, std::move(c));
  }
  for (Pos v = 0; v < positions; ++v) {
    std::size_t degree = pick(10) == 0 ? 0 : 1 + pick(max_degree);
    for (std::size_t k = 0; k < degree; ++k) g.add_edge(v, static_cast<Pos>(pick(positions)));
  }
  return g;
}

}  // namespace zeta::oracle
