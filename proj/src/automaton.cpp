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

#include "zeta/automaton.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace zeta {

std::string Letter::str() const {
  if (bot) return "bot";
  return std::string("(") + (player == Player::Even ? "E" : "O") + "," + std::to_string(prio) + ")";
}

Rank envelope(Rank a, Rank b) { return {std::min(a.min, b.min), std::max(a.max, b.max)}; }

std::optional<StateId> TreeAutomaton::find_state(const std::string& name) const {
  for (StateId q = 0; q < names_.size(); ++q)
    if (names_[q] == name) return q;
  return std::nullopt;
}

bool TreeAutomaton::is_initial(StateId q) const { return std::binary_search(initial_.begin(), initial_.end(), q); }

std::span<const StateId> TreeAutomaton::targets(StateId q, const Letter& a, int dir) const {
  const auto& mv = moves_[q];
  auto it = std::lower_bound(mv.begin(), mv.end(), a, [](const LetterMove& m, const Letter& l) { return m.letter < l; });
  if (it == mv.end() || it->letter != a) return {};
  return it->to[dir];
}

bool TreeAutomaton::is_final(const std::string& exit, StateId q) const {
  const auto& f = finals_[q];
  return std::binary_search(f.begin(), f.end(), exit);
}

std::vector<std::pair<std::string, StateId>> TreeAutomaton::finals() const {
  std::vector<std::pair<std::string, StateId>> out;
  for (StateId q = 0; q < finals_.size(); ++q)
    for (auto& x : finals_[q]) out.emplace_back(x, q);
  std::sort(out.begin(), out.end());
  return out;
}

Priority TreeAutomaton::max_color(std::size_t dim) const {
  Priority m = 0;
  for (auto& c : colors_) m = std::max(m, c[dim]);
  return m;
}

std::size_t TreeAutomaton::num_transitions() const {
  std::size_t n = 0;
  for (auto& mv : moves_)
    for (auto& m : mv) n += m.to[0].size() + m.to[1].size();
  return n;
}

// ---------------------------------------------------------------------------
// Builder

StateId TreeAutomaton::Builder::add_state(std::string name, std::vector<Priority> colors) {
  if (colors.size() != arity_)
    throw InvariantViolation("state '" + name + "' has " + std::to_string(colors.size()) + " colors, expected " +
                             std::to_string(arity_));
  auto id = static_cast<StateId>(names_.size());
  names_.push_back(std::move(name));
  colors_.push_back(std::move(colors));
  return id;
}

void TreeAutomaton::Builder::add_transition(StateId from, const Letter& a, int dir, StateId to) {
  moves_[{from, a}][dir].insert(to);
}

void TreeAutomaton::Builder::add_final(const std::string& exit, StateId q) {
  exits_.insert(exit);
  finals_.emplace(exit, q);
}

TreeAutomaton TreeAutomaton::Builder::build() const {
  const auto n = names_.size();
  auto check_state = [&](StateId q, const char* where) {
    if (q >= n) throw InvariantViolation(std::string("unknown state id in ") + where);
  };
  if (rank_.min > rank_.max) throw InvariantViolation("rank min exceeds max");

  TreeAutomaton a;
  a.rank_ = rank_;
  a.arity_ = arity_;
  a.colors_ = colors_;
  a.moves_.resize(n);
  a.finals_.resize(n);

  // Duplicate names get a numeric suffix so that ids stay unique on disk.
  std::unordered_set<std::string> seen;
  a.names_.reserve(n);
  for (auto& name : names_) {
    std::string unique = name;
    for (unsigned i = 2; !seen.insert(unique).second; ++i) unique = name + "#" + std::to_string(i);
    a.names_.push_back(unique);
  }

  for (StateId q : initial_) {
    check_state(q, "initial");
    a.initial_.push_back(q);
  }
  for (auto& [key, to] : moves_) {
    auto [from, letter] = key;
    check_state(from, "transitions");
    if (!letter.bot && (letter.prio < rank_.min || letter.prio > rank_.max))
      throw InvariantViolation("letter " + letter.str() + " outside rank [" + std::to_string(rank_.min) + "," +
                               std::to_string(rank_.max) + "]");
    LetterMove m{letter, {}};
    for (int d = 0; d < 2; ++d)
      for (StateId t : to[d]) {
        check_state(t, "transitions");
        m.to[d].push_back(t);
      }
    a.moves_[from].push_back(std::move(m));  // map order keeps letters sorted per state
  }
  for (auto& [x, q] : finals_) {
    check_state(q, "finals");
    a.finals_[q].push_back(x);
  }
  for (auto& f : a.finals_) std::sort(f.begin(), f.end());
  a.exits_.assign(exits_.begin(), exits_.end());
  return a;
}

StateId append_copy(TreeAutomaton::Builder& b, const TreeAutomaton& a, const std::string& prefix) {
  auto offset = static_cast<StateId>(b.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) {
    auto c = a.colors(q);
    b.add_state(prefix + a.state_name(q), std::vector<Priority>(c.begin(), c.end()));
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (auto& m : a.moves(q))
      for (int d = 0; d < 2; ++d)
        for (StateId t : m.to[d]) b.add_transition(offset + q, m.letter, d, offset + t);
    for (auto& x : a.final_exits(q)) b.add_final(x, offset + q);
  }
  for (auto& x : a.exits()) b.add_exit(x);
  return offset;
}

TreeAutomaton empty_automaton(Rank rank, std::size_t arity) {
  TreeAutomaton::Builder b(rank, arity);
  return b.build();
}

// ---------------------------------------------------------------------------
// Basic languages

TreeAutomaton proj_automaton(const std::string& x) {
  TreeAutomaton::Builder b({0, 0});
  StateId q = b.add_state("exit_" + x, 0);
  b.add_initial(q);
  b.add_final(x, q);
  return b.build();
}

namespace {

const Letter kEven0 = Letter::game(Player::Even, 0);
const Letter kOdd0 = Letter::game(Player::Odd, 0);

void add_both(TreeAutomaton::Builder& b, StateId from, const Letter& a, StateId to) {
  b.add_transition(from, a, 0, to);
  b.add_transition(from, a, 1, to);
}

// Root (Even,0) with the exit `live` on side `dir` and a bottom subtree on
// the other side.
void add_sum_branch(TreeAutomaton::Builder& b, int dir, const std::string& prefix) {
  StateId root = b.add_state(prefix + "root", 0);
  StateId live = b.add_state(prefix + (dir == 0 ? "X" : "Y"), 0);
  StateId bot = b.add_state(prefix + "bot", 0);
  b.add_initial(root);
  b.add_transition(root, kEven0, dir, live);
  b.add_transition(root, kEven0, 1 - dir, bot);
  add_both(b, bot, Letter::bottom(), bot);
  b.add_final(dir == 0 ? "X" : "Y", live);
}

}  // namespace

TreeAutomaton connective_automaton(ConnectiveShape op) {
  TreeAutomaton::Builder b({0, 0});
  b.add_exit("X");
  b.add_exit("Y");
  switch (op) {
    case ConnectiveShape::SumLeft:
      add_sum_branch(b, 0, "");
      break;
    case ConnectiveShape::SumRight:
      add_sum_branch(b, 1, "");
      break;
    case ConnectiveShape::Sum:
      add_sum_branch(b, 0, "inl_");
      add_sum_branch(b, 1, "inr_");
      break;
    case ConnectiveShape::CartProd:
    case ConnectiveShape::ParProd: {
      StateId root = b.add_state("root", 0);
      StateId l = b.add_state("X", 0);
      StateId r = b.add_state("Y", 0);
      Letter a = op == ConnectiveShape::CartProd ? kEven0 : kOdd0;
      b.add_initial(root);
      b.add_transition(root, a, 0, l);
      b.add_transition(root, a, 1, r);
      b.add_final("X", l);
      b.add_final("Y", r);
      break;
    }
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Substitution and fixpoints

namespace {

void require_plain(const TreeAutomaton& a, const char* op) {
  if (a.arity() != 1) throw PreconditionError(std::string(op) + " requires plain parity acceptance");
}

void require_exit(const TreeAutomaton& a, const std::string& x, const char* op) {
  if (!std::binary_search(a.exits().begin(), a.exits().end(), x))
    throw PreconditionError(std::string(op) + ": '" + x + "' is not an exit of the automaton");
}

bool reaches_exit(const TreeAutomaton& a, std::span<const StateId> states, const std::string& x) {
  return std::any_of(states.begin(), states.end(), [&](StateId t) { return a.is_final(x, t); });
}

Priority least_with_parity_at_least(Priority v, unsigned parity) { return v % 2 == parity ? v : v + 1; }

}  // namespace

TreeAutomaton substitute_language(const TreeAutomaton& a, const std::map<std::string, TreeAutomaton>& bindings) {
  require_plain(a, "substitute_language");
  for (auto& [x, m] : bindings) {
    require_exit(a, x, "substitute_language");
    require_plain(m, "substitute_language");
  }
  Rank rank = a.rank();
  for (auto& [x, m] : bindings) rank = envelope(rank, m.rank());

  TreeAutomaton::Builder b(rank);
  for (StateId q = 0; q < a.num_states(); ++q) b.add_state(a.state_name(q), a.color(q));
  std::map<std::string, std::vector<StateId>> entry;  // initial states of each plugged automaton
  for (auto& [x, m] : bindings) {
    StateId off = append_copy(b, m, x + "/");
    for (StateId r : m.initial()) entry[x].push_back(off + r);
  }
  auto is_bound = [&](const std::string& x) { return bindings.count(x) > 0; };

  for (StateId q = 0; q < a.num_states(); ++q) {
    for (auto& mv : a.moves(q))
      for (int d = 0; d < 2; ++d)
        for (StateId t : mv.to[d]) {
          b.add_transition(q, mv.letter, d, t);
          for (auto& x : a.final_exits(t))
            if (is_bound(x))
              for (StateId r : entry[x]) b.add_transition(q, mv.letter, d, r);
        }
    for (auto& x : a.final_exits(q))
      if (!is_bound(x)) b.add_final(x, q);
  }
  for (StateId q0 : a.initial()) {
    b.add_initial(q0);
    for (auto& x : a.final_exits(q0))
      if (is_bound(x))
        for (StateId r : entry[x]) b.add_initial(r);
  }
  for (auto& x : a.exits())
    if (!is_bound(x)) b.add_exit(x);
  return b.build();
}

TreeAutomaton fixpoint_mu(const TreeAutomaton& a, const std::string& x) {
  require_plain(a, "fixpoint_mu");
  require_exit(a, x, "fixpoint_mu");
  const Priority restart_color = least_with_parity_at_least(a.max_color(), 1);

  TreeAutomaton::Builder b(a.rank());
  for (StateId q = 0; q < a.num_states(); ++q) b.add_state(a.state_name(q), a.color(q));
  std::vector<StateId> restart;  // restart copy of each initial state
  for (StateId r : a.initial()) restart.push_back(b.add_state("mu_" + x + "_" + a.state_name(r), restart_color));

  auto add_moves = [&](StateId from, StateId src) {
    for (auto& mv : a.moves(src))
      for (int d = 0; d < 2; ++d) {
        for (StateId t : mv.to[d]) b.add_transition(from, mv.letter, d, t);
        if (reaches_exit(a, mv.to[d], x))
          for (StateId r : restart) b.add_transition(from, mv.letter, d, r);
      }
    for (auto& y : a.final_exits(src))
      if (y != x) b.add_final(y, from);
  };
  for (StateId q = 0; q < a.num_states(); ++q) add_moves(q, q);
  for (std::size_t i = 0; i < restart.size(); ++i) add_moves(restart[i], a.initial()[i]);
  for (StateId r : a.initial()) b.add_initial(r);
  for (auto& y : a.exits())
    if (y != x) b.add_exit(y);
  return trim(b.build());
}

TreeAutomaton fixpoint_gamma(const TreeAutomaton& a, const std::string& x, BinderKind kind) {
  require_plain(a, "fixpoint_gamma");
  require_exit(a, x, "fixpoint_gamma");
  if (kind == BinderKind::Mu) throw PreconditionError("fixpoint_gamma expects zeta or nu");
  const Priority k = a.rank().max;
  const Priority j = least_with_parity_at_least(k, kind == BinderKind::Zeta ? 0 : 1);
  const Priority wrap_color = least_with_parity_at_least(a.max_color(), 0);
  const Letter wrap_letter = Letter::game(Player::Even, j);

  TreeAutomaton::Builder b({a.rank().min, std::max(k, j)});
  for (StateId q = 0; q < a.num_states(); ++q) b.add_state(a.state_name(q), a.color(q));
  const std::string tag = kind == BinderKind::Zeta ? "zeta_" : "nu_";
  StateId q0 = b.add_state(tag + x, wrap_color);
  StateId bot = b.add_state(tag + x + "_bot", wrap_color);

  for (StateId q = 0; q < a.num_states(); ++q) {
    for (auto& mv : a.moves(q))
      for (int d = 0; d < 2; ++d) {
        for (StateId t : mv.to[d]) b.add_transition(q, mv.letter, d, t);
        if (reaches_exit(a, mv.to[d], x)) b.add_transition(q, mv.letter, d, q0);
      }
    for (auto& y : a.final_exits(q))
      if (y != x) b.add_final(y, q);
  }
  for (StateId r : a.initial()) b.add_transition(q0, wrap_letter, 0, r);
  if (reaches_exit(a, a.initial(), x)) b.add_transition(q0, wrap_letter, 0, q0);
  b.add_transition(q0, wrap_letter, 1, bot);
  add_both(b, bot, Letter::bottom(), bot);
  b.add_initial(q0);
  for (auto& y : a.exits())
    if (y != x) b.add_exit(y);
  return trim(b.build());
}

namespace {

TreeAutomaton with_exit(const TreeAutomaton& a, const std::string& x) {
  if (std::binary_search(a.exits().begin(), a.exits().end(), x)) return a;
  TreeAutomaton::Builder b(a.rank(), a.arity());
  append_copy(b, a, "");
  for (StateId r : a.initial()) b.add_initial(r);
  b.add_exit(x);
  return b.build();
}

}  // namespace

TreeAutomaton compile(const Expr& e) {
  if (auto* v = e.as_var()) return proj_automaton(v->name);
  if (auto* c = e.as_binary()) {
    ConnectiveShape shape = c->op == ConnectiveKind::Sum        ? ConnectiveShape::Sum
                            : c->op == ConnectiveKind::CartProd ? ConnectiveShape::CartProd
                                                                : ConnectiveShape::ParProd;
    std::map<std::string, TreeAutomaton> bindings;
    bindings.emplace("X", compile(c->left));
    bindings.emplace("Y", compile(c->right));
    return trim(substitute_language(connective_automaton(shape), bindings));
  }
  auto* b = e.as_binder();
  if (!b) throw PreconditionError("compile: empty expression");
  TreeAutomaton body = with_exit(compile(b->body), b->name);
  if (b->kind == BinderKind::Mu) return fixpoint_mu(body, b->name);
  return fixpoint_gamma(body, b->name, b->kind);
}

// ---------------------------------------------------------------------------
// Winner languages and boolean operations

TreeAutomaton winner_automaton(Player player, Rank rank, const std::vector<std::string>& exits) {
  if (rank.min > rank.max) throw PreconditionError("winner_automaton: empty rank");
  const Priority flip = player == Player::Even ? 0 : 1;
  const Priority sink_color = least_with_parity_at_least(rank.max + flip, 0);

  TreeAutomaton::Builder b(rank);
  // check(m, d): the node is on the strategy, carries priority m and, when
  // owned by `player`, the strategy continues in direction d.
  std::vector<StateId> checks;
  for (Priority m = rank.min; m <= rank.max; ++m)
    for (int d = 0; d < 2; ++d)
      checks.push_back(b.add_state("check_" + std::to_string(m) + "_" + std::to_string(d), m + flip));
  StateId any = b.add_state("any", sink_color);
  StateId bot = b.add_state("bot", sink_color);

  for (Priority m = rank.min; m <= rank.max; ++m)
    for (int d = 0; d < 2; ++d) {
      StateId q = checks[2 * (m - rank.min) + d];
      for (Player owner : {Player::Even, Player::Odd}) {
        Letter a = Letter::game(owner, m);
        if (owner == player) {
          for (StateId t : checks) b.add_transition(q, a, d, t);
          b.add_transition(q, a, 1 - d, any);
        } else {
          for (int dd = 0; dd < 2; ++dd) {
            for (StateId t : checks) b.add_transition(q, a, dd, t);
            b.add_transition(q, a, dd, bot);
          }
        }
      }
      b.add_initial(q);
    }
  add_both(b, any, Letter::bottom(), any);
  for (Priority m = rank.min; m <= rank.max; ++m)
    for (Player owner : {Player::Even, Player::Odd}) add_both(b, any, Letter::game(owner, m), any);
  add_both(b, bot, Letter::bottom(), bot);

  for (auto& x : exits) {
    b.add_final(x, any);
    if (player == Player::Even)
      for (StateId q : checks) b.add_final(x, q);
  }
  return b.build();
}

TreeAutomaton intersect(const TreeAutomaton& a, const TreeAutomaton& b) {
  TreeAutomaton::Builder out(envelope(a.rank(), b.rank()), a.arity() + b.arity());
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> work;
  auto id_of = [&](StateId p, StateId q) {
    auto [it, inserted] = ids.try_emplace({p, q}, 0);
    if (inserted) {
      std::vector<Priority> colors(a.colors(p).begin(), a.colors(p).end());
      colors.insert(colors.end(), b.colors(q).begin(), b.colors(q).end());
      it->second = out.add_state("(" + a.state_name(p) + "," + b.state_name(q) + ")", std::move(colors));
      work.emplace_back(p, q);
    }
    return it->second;
  };
  for (StateId p : a.initial())
    for (StateId q : b.initial()) out.add_initial(id_of(p, q));
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    StateId self = ids.at({p, q});
    for (auto& mv : a.moves(p)) {
      for (int d = 0; d < 2; ++d) {
        auto tb = b.targets(q, mv.letter, d);
        for (StateId s : mv.to[d])
          for (StateId t : tb) out.add_transition(self, mv.letter, d, id_of(s, t));
      }
    }
    for (auto& x : a.final_exits(p))
      if (b.is_final(x, q)) out.add_final(x, self);
  }
  for (auto& x : a.exits()) out.add_exit(x);
  for (auto& x : b.exits()) out.add_exit(x);
  return out.build();
}

// ---------------------------------------------------------------------------
// Priority surgery

TreeAutomaton shift_priorities(const TreeAutomaton& a, Priority delta) {
  if (delta % 2 != 0) throw PreconditionError("shift_priorities: delta must be even");
  TreeAutomaton::Builder b({a.rank().min + delta, a.rank().max + delta}, a.arity());
  for (StateId q = 0; q < a.num_states(); ++q) {
    std::vector<Priority> c(a.colors(q).begin(), a.colors(q).end());
    for (auto& v : c) v += delta;
    b.add_state(a.state_name(q), std::move(c));
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (auto& mv : a.moves(q)) {
      Letter l = mv.letter;
      if (!l.bot) l.prio += delta;
      for (int d = 0; d < 2; ++d)
        for (StateId t : mv.to[d]) b.add_transition(q, l, d, t);
    }
    for (auto& x : a.final_exits(q)) b.add_final(x, q);
  }
  for (StateId r : a.initial()) b.add_initial(r);
  for (auto& x : a.exits()) b.add_exit(x);
  return b.build();
}

std::map<Priority, Priority> compress_map(const std::set<Priority>& colors) {
  std::map<Priority, Priority> out;
  std::optional<Priority> current;
  for (Priority c : colors) {
    if (!current) current = c % 2;
    else if (*current % 2 != c % 2) ++*current;
    out[c] = *current;
  }
  return out;
}

TreeAutomaton compress_priorities(const TreeAutomaton& a) {
  std::vector<std::map<Priority, Priority>> maps;
  for (std::size_t dim = 0; dim < a.arity(); ++dim) {
    std::set<Priority> used;
    for (StateId q = 0; q < a.num_states(); ++q) used.insert(a.color(q, dim));
    maps.push_back(compress_map(used));
  }
  TreeAutomaton::Builder b(a.rank(), a.arity());
  append_copy(b, a, "");
  TreeAutomaton::Builder out(a.rank(), a.arity());
  for (StateId q = 0; q < a.num_states(); ++q) {
    std::vector<Priority> c(a.colors(q).begin(), a.colors(q).end());
    for (std::size_t dim = 0; dim < c.size(); ++dim) c[dim] = maps[dim].at(c[dim]);
    out.add_state(a.state_name(q), std::move(c));
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (auto& mv : a.moves(q))
      for (int d = 0; d < 2; ++d)
        for (StateId t : mv.to[d]) out.add_transition(q, mv.letter, d, t);
    for (auto& x : a.final_exits(q)) out.add_final(x, q);
  }
  for (StateId r : a.initial()) out.add_initial(r);
  for (auto& x : a.exits()) out.add_exit(x);
  return out.build();
}

TreeAutomaton relabel_shape(const TreeAutomaton& a) {
  TreeAutomaton::Builder b({0, 0}, a.arity());
  for (StateId q = 0; q < a.num_states(); ++q) {
    auto c = a.colors(q);
    b.add_state(a.state_name(q), std::vector<Priority>(c.begin(), c.end()));
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (auto& mv : a.moves(q)) {
      Letter l = mv.letter.bot ? Letter::bottom() : shape_letter();
      for (int d = 0; d < 2; ++d)
        for (StateId t : mv.to[d]) b.add_transition(q, l, d, t);
    }
    for (auto& x : a.final_exits(q)) b.add_final(x, q);
  }
  for (StateId r : a.initial()) b.add_initial(r);
  for (auto& x : a.exits()) b.add_exit(x);
  return b.build();
}

TreeAutomaton trim(const TreeAutomaton& a) {
  std::vector<char> seen(a.num_states(), 0);
  std::deque<StateId> work(a.initial().begin(), a.initial().end());
  for (StateId r : a.initial()) seen[r] = 1;
  while (!work.empty()) {
    StateId q = work.front();
    work.pop_front();
    for (auto& mv : a.moves(q))
      for (int d = 0; d < 2; ++d)
        for (StateId t : mv.to[d])
          if (!seen[t]) {
            seen[t] = 1;
            work.push_back(t);
          }
  }
  std::vector<StateId> remap(a.num_states(), 0);
  TreeAutomaton::Builder b(a.rank(), a.arity());
  for (StateId q = 0; q < a.num_states(); ++q)
    if (seen[q]) {
      auto c = a.colors(q);
      remap[q] = b.add_state(a.state_name(q), std::vector<Priority>(c.begin(), c.end()));
    }
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!seen[q]) continue;
    for (auto& mv : a.moves(q))
      for (int d = 0; d < 2; ++d)
        for (StateId t : mv.to[d]) b.add_transition(remap[q], mv.letter, d, remap[t]);
    for (auto& x : a.final_exits(q)) b.add_final(x, remap[q]);
  }
  for (StateId r : a.initial()) b.add_initial(remap[r]);
  for (auto& x : a.exits()) b.add_exit(x);
  return b.build();
}

}  // namespace zeta
