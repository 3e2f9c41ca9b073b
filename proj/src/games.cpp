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

#include "zeta/games.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "zeta/graph.hpp"

namespace zeta {

// ---------------------------------------------------------------------------
// Zielonka

namespace {

int idx(Player p) { return p == Player::Even ? 0 : 1; }

class Zielonka {
 public:
  explicit Zielonka(const GameArena& g)
      : g_(g), pred_(g.size()), strat_(g.size(), kNoPos), stamp_(g.size(), 0), attr_(g.size(), 0), count_(g.size(), -1) {
    for (Pos v = 0; v < g.size(); ++v)
      for (Pos w : g.successors(v)) pred_[w].push_back(v);
  }

  Solution run() {
    const auto n = static_cast<Pos>(g_.size());
    std::vector<Pos> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::array<std::vector<Pos>, 2> w;

    // Dead ends first: afterwards every remaining position has a successor
    // inside the remaining subgame.
    auto s = mark(all);
    std::vector<Pos> adam_dead, eve_dead;
    for (Pos v : all)
      if (g_.successors(v).empty()) (g_.owner(v) == Player::Odd ? adam_dead : eve_dead).push_back(v);
    auto a1 = attract(s, Player::Even, adam_dead);
    std::vector<Pos> rest = minus(all, a1);
    s = mark(rest);
    std::vector<Pos> eve_dead_rest;
    for (Pos v : eve_dead)
      if (stamp_[v] == s) eve_dead_rest.push_back(v);
    auto a2 = attract(s, Player::Odd, eve_dead_rest);
    rest = minus(rest, a2);
    w[0] = a1;
    w[1] = a2;
    auto sub = solve(rest);
    append(w[0], sub[0]);
    append(w[1], sub[1]);

    Solution sol;
    sol.winner.assign(n, Player::Odd);
    for (Pos v : w[0]) sol.winner[v] = Player::Even;
    std::vector<Pos> eve(n, kNoPos), adam(n, kNoPos);
    for (Pos v = 0; v < n; ++v) {
      const auto& succ = g_.successors(v);
      Pos fallback = succ.empty() ? kNoPos : succ.front();
      Pos pick = (sol.winner[v] == g_.owner(v)) ? strat_[v] : fallback;
      if (sol.winner[v] == g_.owner(v) && !succ.empty() && pick == kNoPos)
        throw InvariantViolation("solver left a winning position without a move");
      (g_.owner(v) == Player::Even ? eve : adam)[v] = pick;
    }
    sol.eve = Strategy::positional(Player::Even, std::move(eve));
    sol.adam = Strategy::positional(Player::Odd, std::move(adam));
    return sol;
  }

 private:
  std::array<std::vector<Pos>, 2> solve(std::vector<Pos> G) {
    std::array<std::vector<Pos>, 2> w;
    while (!G.empty()) {
      auto s = mark(G);
      Priority d = 0;
      for (Pos v : G) d = std::max(d, g_.color(v));
      const Player a = d % 2 == 0 ? Player::Even : Player::Odd;
      std::vector<Pos> top;
      for (Pos v : G)
        if (g_.color(v) == d) {
          top.push_back(v);
          if (g_.owner(v) == a) strat_[v] = any_successor(v, s);
        }
      auto A = attract(s, a, top);
      auto sub = solve(minus(G, A));
      if (sub[idx(opponent(a))].empty()) {
        append(w[idx(a)], G);
        break;
      }
      s = mark(G);
      auto B = attract(s, opponent(a), sub[idx(opponent(a))]);
      append(w[idx(opponent(a))], B);
      G = minus(G, B);
    }
    return w;
  }

  std::uint32_t mark(const std::vector<Pos>& G) {
    ++cur_;
    for (Pos v : G) stamp_[v] = cur_;
    return cur_;
  }

  Pos any_successor(Pos v, std::uint32_t s) const {
    for (Pos w : g_.successors(v))
      if (stamp_[w] == s) return w;
    return kNoPos;
  }

  // Attractor of `target` for player p inside the subgame stamped s. Sets
  // attr_ to a fresh stamp on the result.
  std::vector<Pos> attract(std::uint32_t s, Player p, const std::vector<Pos>& target) {
    ++attr_cur_;
    std::vector<Pos> out;
    std::vector<Pos> touched;
    for (Pos v : target)
      if (attr_[v] != attr_cur_) {
        attr_[v] = attr_cur_;
        out.push_back(v);
      }
    for (std::size_t i = 0; i < out.size(); ++i) {
      Pos v = out[i];
      for (Pos u : pred_[v]) {
        if (stamp_[u] != s || attr_[u] == attr_cur_) continue;
        if (g_.owner(u) == p) {
          strat_[u] = v;
        } else {
          if (count_[u] < 0) {
            count_[u] = 0;
            for (Pos x : g_.successors(u))
              if (stamp_[x] == s) ++count_[u];
            touched.push_back(u);
          }
          if (--count_[u] > 0) continue;
        }
        attr_[u] = attr_cur_;
        out.push_back(u);
      }
    }
    for (Pos u : touched) count_[u] = -1;
    return out;
  }

  std::vector<Pos> minus(const std::vector<Pos>& G, const std::vector<Pos>& A) {
    ++attr_cur_;
    for (Pos v : A) attr_[v] = attr_cur_;
    std::vector<Pos> out;
    for (Pos v : G)
      if (attr_[v] != attr_cur_) out.push_back(v);
    return out;
  }

  static void append(std::vector<Pos>& into, const std::vector<Pos>& from) { into.insert(into.end(), from.begin(), from.end()); }

  const GameArena& g_;
  std::vector<std::vector<Pos>> pred_;
  std::vector<Pos> strat_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> attr_;
  std::vector<int> count_;
  std::uint32_t cur_ = 0;
  std::uint32_t attr_cur_ = 0;
};

}  // namespace

Solution solve_parity(const GameArena& arena) {
  if (arena.dims() != 1) throw PreconditionError("solve_parity requires a single color dimension");
  return Zielonka(arena).run();
}

// ---------------------------------------------------------------------------
// Conjunctions via index appearance records

namespace {

struct StreettPair {
  std::size_t dim;
  Priority odd;
};

GameArena project(const GameArena& arena, std::optional<std::size_t> dim) {
  GameArena out(1);
  for (Pos v = 0; v < arena.size(); ++v) out.add_position(arena.owner(v), dim ? arena.color(v, *dim) : 0);
  for (Pos v = 0; v < arena.size(); ++v)
    for (Pos w : arena.successors(v)) out.add_edge(v, w);
  return out;
}

}  // namespace

Solution solve_conjunction(const GameArena& arena, std::size_t max_product) {
  if (arena.dims() == 1) return solve_parity(arena);

  std::vector<StreettPair> pairs;
  std::set<std::size_t> live_dims;
  for (std::size_t d = 0; d < arena.dims(); ++d) {
    std::set<Priority> odd;
    for (Pos v = 0; v < arena.size(); ++v)
      if (arena.color(v, d) % 2 == 1) odd.insert(arena.color(v, d));
    for (Priority p : odd) pairs.push_back({d, p});
    if (!odd.empty()) live_dims.insert(d);
  }
  if (live_dims.size() <= 1) {
    std::optional<std::size_t> dim;
    if (!live_dims.empty()) dim = *live_dims.begin();
    return solve_parity(project(arena, dim));
  }

  using Perm = std::vector<std::uint8_t>;
  const auto n = pairs.size();
  if (n > 250) throw GuardExceeded("solve_conjunction: too many Streett pairs");
  std::vector<Perm> perms;
  std::map<Perm, std::uint32_t> perm_id;
  auto intern = [&](const Perm& p) {
    auto [it, inserted] = perm_id.try_emplace(p, static_cast<std::uint32_t>(perms.size()));
    if (inserted) perms.push_back(p);
    return it->second;
  };
  Perm identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  intern(identity);

  GameArena product(1);
  std::unordered_map<std::uint64_t, Pos> ids;
  std::vector<std::pair<Pos, std::uint32_t>> origin;
  std::vector<std::uint32_t> after;  // record after leaving each product position
  std::deque<Pos> work;
  auto key = [](Pos v, std::uint32_t m) { return (static_cast<std::uint64_t>(m) << 32) | v; };

  auto id_of = [&](Pos v, std::uint32_t m) {
    auto [it, inserted] = ids.try_emplace(key(v, m), 0);
    if (!inserted) return it->second;
    if (product.size() >= max_product) throw GuardExceeded("solve_conjunction: product exceeds guard");
    const Perm& pi = perms[m];
    Perm stay, moved;
    std::size_t g = n, r = n;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& pr = pairs[pi[j]];
      Priority c = arena.color(v, pr.dim);
      if (c > pr.odd) {
        g = std::min(g, j);
        moved.push_back(pi[j]);
      } else {
        if (c == pr.odd) r = std::min(r, j);
        stay.push_back(pi[j]);
      }
    }
    Priority color = 0;
    if (g < n) color = std::max<Priority>(color, 2 * static_cast<Priority>(n + 2 - g));
    if (r < n) color = std::max<Priority>(color, 2 * static_cast<Priority>(n + 1 - r) + 1);
    stay.insert(stay.end(), moved.begin(), moved.end());
    std::uint32_t next = intern(stay);
    Pos p = product.add_position(arena.owner(v), color);
    it->second = p;
    origin.emplace_back(v, m);
    after.push_back(next);
    work.push_back(p);
    return p;
  };

  for (Pos v = 0; v < arena.size(); ++v) id_of(v, 0);
  while (!work.empty()) {
    Pos p = work.front();
    work.pop_front();
    auto [v, m] = origin[p];
    std::uint32_t next = after[p];
    for (Pos w : arena.successors(v)) product.add_edge(p, id_of(w, next));
  }

  Solution inner = solve_parity(product);
  Solution sol;
  sol.winner.resize(arena.size());
  for (Pos v = 0; v < arena.size(); ++v) sol.winner[v] = inner.winner[ids.at(key(v, 0))];

  const auto M = static_cast<std::uint32_t>(perms.size());
  auto lift = [&](const Strategy& s) {
    Strategy out;
    out.owner = s.owner;
    out.memory_size = M;
    out.initial_memory = 0;
    out.move.assign(arena.size() * static_cast<std::size_t>(M), kNoPos);
    out.next_mem.assign(arena.size() * static_cast<std::size_t>(M), 0);
    for (Pos p = 0; p < product.size(); ++p) {
      auto [v, m] = origin[p];
      std::size_t at = static_cast<std::size_t>(v) * M + m;
      out.next_mem[at] = after[p];
      if (arena.owner(v) == s.owner) {
        Pos c = s.choice(p, 0);
        if (c != kNoPos) out.move[at] = origin[c].first;
      }
    }
    return out;
  };
  sol.eve = lift(inner.eve);
  sol.adam = lift(inner.adam);
  return sol;
}

Solution solve(const GameArena& arena) { return arena.dims() == 1 ? solve_parity(arena) : solve_conjunction(arena); }

// ---------------------------------------------------------------------------
// Verification

namespace {

// Does the subgraph induced by `nodes` contain a strongly connected part
// whose maximal color is even in every dimension?
bool has_good_cycle(const Digraph& g, const std::vector<std::vector<Priority>>& colors, std::vector<std::uint32_t> nodes) {
  for (auto& comp : strongly_connected(g, nodes)) {
    if (!is_cyclic(g, comp)) continue;
    const auto dims = colors[comp.front()].size();
    std::optional<std::pair<std::size_t, Priority>> bad;
    for (std::size_t d = 0; d < dims && !bad; ++d) {
      Priority m = 0;
      for (auto u : comp) m = std::max(m, colors[u][d]);
      if (m % 2 == 1) bad = std::make_pair(d, m);
    }
    if (!bad) return true;
    std::vector<std::uint32_t> rest;
    for (auto u : comp)
      if (colors[u][bad->first] != bad->second) rest.push_back(u);
    if (!rest.empty() && has_good_cycle(g, colors, std::move(rest))) return true;
  }
  return false;
}

}  // namespace

Verdict verify_strategy(const GameArena& arena, const Strategy& s, std::span<const Pos> from) {
  const auto M = s.memory_size;
  if (s.move.size() != arena.size() * static_cast<std::size_t>(M))
    return {false, "strategy table does not match the arena"};
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::pair<Pos, std::uint32_t>> nodes;
  Digraph g;
  std::deque<std::uint32_t> work;
  auto id_of = [&](Pos v, std::uint32_t m) {
    auto [it, inserted] = ids.try_emplace((static_cast<std::uint64_t>(m) << 32) | v, 0);
    if (inserted) {
      it->second = static_cast<std::uint32_t>(nodes.size());
      nodes.emplace_back(v, m);
      g.emplace_back();
      work.push_back(it->second);
    }
    return it->second;
  };
  for (Pos v : from) id_of(v, s.initial_memory);
  while (!work.empty()) {
    auto u = work.front();
    work.pop_front();
    auto [v, m] = nodes[u];
    const auto& succ = arena.successors(v);
    const auto next = s.update(v, m);
    if (arena.owner(v) == s.owner) {
      if (succ.empty()) return {false, "reachable dead end of the strategy owner at position " + std::to_string(v)};
      Pos c = s.choice(v, m);
      if (c == kNoPos) return {false, "move undefined at position " + std::to_string(v)};
      if (std::find(succ.begin(), succ.end(), c) == succ.end())
        return {false, "illegal move at position " + std::to_string(v)};
      auto t = id_of(c, next);
      g[u].push_back(t);
    } else {
      for (Pos w : succ) {
        auto t = id_of(w, next);
        g[u].push_back(t);
      }
    }
  }

  std::vector<std::vector<Priority>> colors;
  colors.reserve(nodes.size());
  for (auto& [v, m] : nodes) colors.emplace_back(arena.colors(v).begin(), arena.colors(v).end());

  if (s.owner == Player::Odd) {
    std::vector<std::uint32_t> all(nodes.size());
    std::iota(all.begin(), all.end(), 0);
    if (has_good_cycle(g, colors, all)) return {false, "opponent can realise a cycle that is even in every dimension"};
    return {};
  }
  for (std::size_t d = 0; d < arena.dims(); ++d) {
    std::set<Priority> odd;
    for (auto& c : colors)
      if (c[d] % 2 == 1) odd.insert(c[d]);
    for (Priority p : odd) {
      std::vector<std::uint32_t> below;
      for (std::uint32_t u = 0; u < nodes.size(); ++u)
        if (colors[u][d] <= p) below.push_back(u);
      for (auto& comp : strongly_connected(g, below)) {
        if (!is_cyclic(g, comp)) continue;
        for (auto u : comp)
          if (colors[u][d] == p)
            return {false, "reachable cycle with odd maximum " + std::to_string(p) + " in dimension " + std::to_string(d) +
                               " through position " + std::to_string(nodes[u].first)};
      }
    }
  }
  return {};
}

}  // namespace zeta
