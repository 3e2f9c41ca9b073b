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

#include "doctest.h"
#include "zeta/analysis.hpp"
#include "zeta/automaton.hpp"
#include "zeta/io.hpp"
#include "zeta/regtree.hpp"

using namespace zeta;

namespace {

const Letter E0 = Letter::game(Player::Even, 0);
const Letter O0 = Letter::game(Player::Odd, 0);

RegularTree exit_tree(const std::string& x) {
  RegularTree t;
  t.add_exit("n0", x);
  return t;
}

// Root with the given letter and two subtrees given by their labels: an
// exit name, or "bot".
RegularTree fork(Letter root, const std::string& l, const std::string& r) {
  RegularTree t;
  t.rank = {0, root.bot ? 0 : root.prio};
  NodeId n = t.add("root", root);
  NodeId bot = t.add("bot", Letter::bottom());
  t.set_children(bot, bot, bot);
  auto side = [&](const std::string& s, const std::string& id) {
    return s == "bot" ? bot : t.add_exit(id, s);
  };
  NodeId a = side(l, "l");
  NodeId b = side(r, "r");
  t.set_children(n, a, b);
  return t;
}

std::vector<RegularTree> sample_trees(Rank rank, std::vector<std::string> exits, int count) {
  std::vector<RegularTree> out;
  for (int i = 0; i < count; ++i) out.push_back(random_regular_tree(rank, 1 + i % 7, exits, 1000 + i));
  return out;
}

}  // namespace

TEST_CASE("projection accepts exactly the exit leaf") {
  auto a = proj_automaton("X");
  CHECK(a.num_states() == 1);
  CHECK(member(exit_tree("X"), a));
  CHECK_FALSE(member(fork(E0, "X", "X"), a));
  CHECK_FALSE(is_empty(a));
  CHECK(a.rank() == Rank{0, 0});
}

TEST_CASE("connective automata") {
  auto cart = connective_automaton(ConnectiveShape::CartProd);
  auto par = connective_automaton(ConnectiveShape::ParProd);
  auto sum = connective_automaton(ConnectiveShape::Sum);
  CHECK(member(fork(E0, "X", "Y"), cart));
  CHECK_FALSE(member(fork(O0, "X", "Y"), cart));
  CHECK_FALSE(member(fork(E0, "Y", "X"), cart));
  CHECK(member(fork(O0, "X", "Y"), par));
  CHECK_FALSE(member(fork(E0, "X", "Y"), par));
  CHECK(member(fork(E0, "X", "bot"), sum));
  CHECK(member(fork(E0, "bot", "Y"), sum));
  CHECK_FALSE(member(fork(E0, "X", "Y"), sum));
  CHECK_FALSE(member(fork(E0, "Y", "bot"), sum));
  CHECK(member(fork(E0, "X", "bot"), connective_automaton(ConnectiveShape::SumLeft)));
  CHECK_FALSE(member(fork(E0, "bot", "Y"), connective_automaton(ConnectiveShape::SumLeft)));
  CHECK(member(fork(E0, "bot", "Y"), connective_automaton(ConnectiveShape::SumRight)));
}

TEST_CASE("substitution plugs languages into exits") {
  std::map<std::string, TreeAutomaton> b;
  b.emplace("X", proj_automaton("Z"));
  b.emplace("Y", proj_automaton("Z"));
  auto a = substitute_language(connective_automaton(ConnectiveShape::CartProd), b);
  CHECK(a.num_states() == 5);
  CHECK(a.exits() == std::vector<std::string>{"Z"});
  CHECK(member(fork(E0, "Z", "Z"), a));
  CHECK_FALSE(member(fork(O0, "Z", "Z"), a));
  CHECK_THROWS_AS(member(fork(E0, "X", "Z"), a), PreconditionError);
}

TEST_CASE("substitution edge cases") {
  auto cart = connective_automaton(ConnectiveShape::CartProd);
  auto same = substitute_language(cart, {});
  CHECK(automaton_to_json(same) == automaton_to_json(cart));
  std::map<std::string, TreeAutomaton> unknown;
  unknown.emplace("Q", proj_automaton("Z"));
  CHECK_THROWS_AS(substitute_language(cart, unknown), PreconditionError);

  // Binding an exit that no final mentions leaves the language alone.
  TreeAutomaton::Builder bld({0, 0});
  auto q = bld.add_state("q", 0);
  bld.add_initial(q);
  bld.add_final("Y", q);
  bld.add_exit("X");
  auto a = bld.build();
  std::map<std::string, TreeAutomaton> bx;
  bx.emplace("X", compile(parse("zeta F. F")));
  auto s = substitute_language(a, bx);
  CHECK(member(exit_tree("Y"), s));
  CHECK_FALSE(member(spine_tree(0), s));
}

TEST_CASE("least fixpoint") {
  CHECK(is_empty(fixpoint_mu(proj_automaton("X"), "X")));
  CHECK(is_empty(compile(parse("mu X. X"))));
  CHECK_FALSE(is_empty(compile(parse("mu X. T + X @ X"))));
  CHECK_THROWS_AS(fixpoint_mu(proj_automaton("X"), "Y"), PreconditionError);
  // Restarts of an outer mu must not be confused with inner nu loops.
  CHECK_FALSE(is_empty(compile(parse("mu X. nu Y. X + Y"))));
  CHECK_FALSE(is_empty(compile(parse("mu X. zeta Y. X + Y"))));
}

TEST_CASE("least fixpoint without occurrences keeps the language") {
  TreeAutomaton::Builder bld({0, 0});
  auto q = bld.add_state("q", 0);
  bld.add_initial(q);
  bld.add_final("Y", q);
  bld.add_exit("X");
  auto a = fixpoint_mu(bld.build(), "X");
  CHECK(member(exit_tree("Y"), a));
  CHECK(a.exits() == std::vector<std::string>{"Y"});
}

TEST_CASE("greatest fixpoints of the identity") {
  auto z = fixpoint_gamma(proj_automaton("X"), "X", BinderKind::Zeta);
  auto n = fixpoint_gamma(proj_automaton("X"), "X", BinderKind::Nu);
  CHECK(member(spine_tree(0), z));
  CHECK_FALSE(member(spine_tree(1), z));
  CHECK(member(spine_tree(1), n));
  CHECK_FALSE(member(spine_tree(0), n));
  CHECK(z.rank() == Rank{0, 0});
  CHECK(n.rank() == Rank{0, 1});
  CHECK(z.exits().empty());
  CHECK_THROWS_AS(fixpoint_gamma(proj_automaton("X"), "X", BinderKind::Mu), PreconditionError);
}

TEST_CASE("greatest fixpoint without occurrences adds one wrapper") {
  TreeAutomaton::Builder bld({0, 0});
  auto q = bld.add_state("q", 0);
  bld.add_initial(q);
  bld.add_final("Y", q);
  bld.add_exit("X");
  auto a = fixpoint_gamma(bld.build(), "X", BinderKind::Zeta);
  CHECK(member(fork(E0, "Y", "bot"), a));
  CHECK_FALSE(member(exit_tree("Y"), a));
  CHECK_FALSE(member(spine_tree(0), a));
}

TEST_CASE("compile") {
  auto mu = compile(parse("mu X. X"));
  CHECK(mu.num_states() == 1);
  CHECK(is_empty(mu));
  auto top = compile(parse("zeta X. X"));
  CHECK(member(spine_tree(0), top));
  CHECK(minimize(witness(top)).size() == 2);
  auto wkl = compile(parse("zeta X. 1 + X * X"));
  CHECK_FALSE(is_empty(wkl));
  CHECK(wkl.arity() == 1);
  CHECK(compile(parse("X + Y * X")).exits() == std::vector<std::string>{"X", "Y"});
  CHECK(compile(parse("mu X. X + T")).exits().empty());
}

TEST_CASE("winner automata") {
  auto even = winner_automaton(Player::Even, {0, 1});
  auto odd = winner_automaton(Player::Odd, {0, 1});
  CHECK(member(spine_tree(0), even));
  CHECK_FALSE(member(spine_tree(0), odd));
  CHECK_FALSE(member(spine_tree(1), even));
  CHECK(member(spine_tree(1), odd));
  RegularTree all_bot;
  all_bot.rank = {0, 1};
  auto b = all_bot.add("b", Letter::bottom());
  all_bot.set_children(b, b, b);
  CHECK_FALSE(member(all_bot, even));
  CHECK_FALSE(member(all_bot, odd));
  // Exits count for Even.
  auto with_exit = winner_automaton(Player::Even, {0, 0}, {"X"});
  CHECK(member(fork(E0, "X", "bot"), with_exit));
  CHECK(member(fork(O0, "X", "bot"), with_exit));
  CHECK_FALSE(member(fork(O0, "X", "bot"), winner_automaton(Player::Odd, {0, 0}, {"X"})));
}

TEST_CASE("intersection") {
  auto a = intersect(compile(parse("zeta X. X")), winner_automaton(Player::Even, {0, 0}));
  CHECK(a.arity() == 2);
  CHECK_FALSE(is_empty(a));
  auto w = witness(a);
  CHECK(member(w, a));
  CHECK(w.size() == 2);
  CHECK(member(spine_tree(0), a));
  CHECK(is_empty(intersect(empty_automaton(), compile(parse("zeta X. X")))));

  auto x = compile(parse("zeta X. 1 + X * X"));
  auto xx = intersect(x, x);
  auto y = winner_automaton(Player::Odd, x.rank());
  auto xy = intersect(x, y);
  std::vector<RegularTree> trees = sample_trees({0, 2}, {}, 60);
  trees.push_back(witness(x));
  trees.push_back(witness(xy));
  for (auto& t : trees) {
    CHECK(member(t, xx) == member(t, x));
    CHECK(member(t, xy) == (member(t, x) && member(t, y)));
  }
}

TEST_CASE("priority shift") {
  auto a = compile(parse("zeta X. 1 + X * X"));
  CHECK(automaton_to_json(shift_priorities(a, 0)) == automaton_to_json(a));
  CHECK_THROWS_AS(shift_priorities(a, 1), PreconditionError);
  auto s = shift_priorities(a, 2);
  CHECK(s.rank() == Rank{a.rank().min + 2, a.rank().max + 2});
  std::vector<RegularTree> trees = sample_trees(a.rank(), {}, 40);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) trees.push_back(witness(a, seed));
  for (auto& t : trees) CHECK(member(t, a) == member(shift_priorities(t, 2), s));
}

TEST_CASE("priority compression") {
  CHECK(compress_map({2, 4, 7}) == std::map<Priority, Priority>{{2, 0}, {4, 0}, {7, 1}});
  CHECK(compress_map({3}) == std::map<Priority, Priority>{{3, 1}});
  CHECK(compress_map({4}) == std::map<Priority, Priority>{{4, 0}});
  CHECK(compress_map({0, 1, 2}) == std::map<Priority, Priority>{{0, 0}, {1, 1}, {2, 2}});

  TreeAutomaton::Builder b({0, 0});
  auto p = b.add_state("p", 2);
  auto q = b.add_state("q", 4);
  auto r = b.add_state("r", 7);
  b.add_initial(p);
  b.add_transition(p, E0, 0, q);
  b.add_transition(p, E0, 1, r);
  b.add_transition(q, E0, 0, p);
  b.add_transition(q, E0, 1, q);
  b.add_transition(r, E0, 0, r);
  b.add_transition(r, E0, 1, p);
  auto a = b.build();
  auto c = compress_priorities(a);
  CHECK(c.color(p) == 0);
  CHECK(c.color(q) == 0);
  CHECK(c.color(r) == 1);
  CHECK(is_empty(a) == is_empty(c));
  auto w = compress_priorities(compile(parse("zeta X. 1 + X * X")));
  CHECK(automaton_to_json(compress_priorities(w)) == automaton_to_json(w));
}

TEST_CASE("builder invariants") {
  TreeAutomaton::Builder b({0, 1});
  auto q = b.add_state("q", 0);
  b.add_transition(q, Letter::game(Player::Even, 2), 0, q);
  CHECK_THROWS_AS(b.build(), InvariantViolation);
  TreeAutomaton::Builder c({0, 0}, 2);
  CHECK_THROWS_AS(c.add_state("q", 0), InvariantViolation);
  TreeAutomaton::Builder d;
  d.add_initial(3);
  CHECK_THROWS_AS(d.build(), InvariantViolation);
}

TEST_CASE("shape projection of automata") {
  auto a = relabel_shape(compile(parse("nu X. X")));
  CHECK(member(relabel_shape(spine_tree(0)), a));
  CHECK(member(relabel_shape(spine_tree(1)), a));
}
