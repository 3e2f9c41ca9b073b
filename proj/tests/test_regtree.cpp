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

#include <string>

#include "doctest.h"
#include "zeta/io.hpp"
#include "zeta/regtree.hpp"

using namespace zeta;

namespace {

RegularTree fixture(const std::string& name) {
  return tree_from_json(read_file(std::string(ZETA_FIXTURES) + "/" + name));
}

RegularTree diamond(Player top, Priority left, Priority right) {
  // Root of the given owner choosing between two self-looping nodes.
  RegularTree t;
  t.rank = {0, std::max(left, right)};
  auto r = t.add("r", Letter::game(top, 0));
  auto a = t.add("a", Letter::game(Player::Even, left));
  auto b = t.add("b", Letter::game(Player::Even, right));
  auto bot = t.add("bot", Letter::bottom());
  t.set_children(r, a, b);
  t.set_children(a, a, bot);
  t.set_children(b, b, bot);
  t.set_children(bot, bot, bot);
  return t;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(spine_tree(0)));
  RegularTree empty;
  CHECK_FALSE(validate(empty));

  RegularTree t;
  t.rank = {0, 1};
  auto a = t.add("a", Letter::game(Player::Even, 2));
  t.set_children(a, a, a);
  auto d = validate(t);
  CHECK_FALSE(d);
  CHECK(d.problems.size() == 1);

  RegularTree u;
  auto b = u.add("b", Letter::bottom());
  auto g = u.add("g", Letter::game(Player::Even, 0));
  u.set_children(b, g, b);
  u.set_children(g, g, g);
  CHECK_FALSE(validate(u));

  RegularTree v;
  auto x = v.add("x", Letter::game(Player::Even, 0));
  v.set_children(x, x, kNoNode);
  CHECK_FALSE(validate(v));

  RegularTree w;
  w.add_exit("e", "X");
  w.add_exit("e", "Y");
  CHECK_FALSE(validate(w));
}

TEST_CASE("unfolding") {
  auto t = spine_tree(0);
  CHECK(render_levels(unfold(t, 0)) == "(E,0)\n");
  CHECK(render_levels(unfold(t, 1)) == "(E,0)\n  (E,0) bot\n");
  CHECK(render_levels(unfold(t, 2)) == "(E,0)\n  (E,0) bot\n    (E,0) bot bot bot\n");

  RegularTree e;
  auto r = e.add("r", Letter::game(Player::Odd, 0));
  auto x = e.add_exit("x", "X");
  auto bot = e.add("bot", Letter::bottom());
  e.set_children(r, x, bot);
  e.set_children(bot, bot, bot);
  CHECK(render_levels(unfold(e, 3)) == "(O,0)\n  exit X bot\n    bot bot\n      bot bot bot bot\n");
}

TEST_CASE("tree arena") {
  auto ta = tree_to_arena(spine_tree(1));
  CHECK(ta.arena.size() == 1);
  CHECK(ta.arena.color(0) == 1);
  CHECK(ta.position[1] == kNoPos);

  auto t = diamond(Player::Even, 1, 2);
  auto tb = tree_to_arena(t);
  CHECK(tb.arena.size() == 3);
  CHECK(tb.arena.successors(tb.position[0]).size() == 2);
}

TEST_CASE("tree games") {
  CHECK(solve_tree(spine_tree(0)).winner == Player::Even);
  CHECK(solve_tree(spine_tree(1)).winner == Player::Odd);
  CHECK_FALSE(solve_tree(spine_tree(1)).strategy);

  auto t = diamond(Player::Even, 1, 2);
  auto s = solve_tree(t);
  REQUIRE(s.winner == Player::Even);
  REQUIRE(s.strategy);
  CHECK(s.strategy->at(0) == 1);
  CHECK(check_strategy(t, *s.strategy));

  CHECK(solve_tree(diamond(Player::Odd, 1, 2)).winner == Player::Odd);
  CHECK(solve_tree(diamond(Player::Odd, 0, 2)).winner == Player::Even);

  RegularTree bot;
  auto b = bot.add("b", Letter::bottom());
  bot.set_children(b, b, b);
  CHECK(solve_tree(bot).winner == Player::Odd);
  CHECK(enumerate_strategies(bot, 10).empty());

  // An Even node whose children are both bottom is a dead end.
  RegularTree stuck;
  auto r = stuck.add("r", Letter::game(Player::Even, 0));
  auto sb = stuck.add("bot", Letter::bottom());
  stuck.set_children(r, sb, sb);
  stuck.set_children(sb, sb, sb);
  CHECK(solve_tree(stuck).winner == Player::Odd);
  // An Odd node without moves is won by Even.
  stuck.nodes[r].label = Letter::game(Player::Odd, 1);
  stuck.rank = {0, 1};
  CHECK(solve_tree(stuck).winner == Player::Even);
}

TEST_CASE("exits are won by Even") {
  RegularTree t;
  t.add_exit("x", "X");
  CHECK(solve_tree(t).winner == Player::Even);
}

TEST_CASE("strategy enumeration") {
  CHECK(enumerate_strategies(spine_tree(0), 10).size() == 1);
  CHECK(enumerate_strategies(spine_tree(1), 10).empty());
  auto full = fixture("automata/wkl_full_binary.tree.json");
  auto all = enumerate_strategies(full, 10);
  CHECK(all.size() == 2);
  for (auto& s : all) CHECK(check_strategy(full, s));
  CHECK(enumerate_strategies(full, 1).size() == 1);
  CHECK(enumerate_strategies(diamond(Player::Even, 1, 2), 10).size() == 1);

  RegularTree big;
  big.rank = {0, 0};
  auto bot = big.add("bot", Letter::bottom());
  big.set_children(bot, bot, bot);
  NodeId prev = kNoNode;
  for (int i = 0; i < 17; ++i) {
    auto n = big.add("n" + std::to_string(i), Letter::game(Player::Even, 0));
    if (prev != kNoNode) big.set_children(prev, n, n);
    prev = n;
  }
  big.set_children(prev, prev, bot);
  big.root = 1;
  CHECK_THROWS_AS(enumerate_strategies(big, 10), GuardExceeded);
}

TEST_CASE("strategy checking") {
  auto t = diamond(Player::Even, 1, 2);
  CHECK(check_strategy(t, {{0, 1}, {2, 0}}));
  CHECK_FALSE(check_strategy(t, {{0, 1}}));
  CHECK_FALSE(check_strategy(t, {{0, 0}}));
  CHECK_FALSE(check_strategy(t, {}));
}

TEST_CASE("solver and enumeration agree") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto t = random_regular_tree({0, 3}, 1 + seed % 9, {}, seed);
    auto s = solve_tree(t);
    bool some = !enumerate_strategies(t, 1).empty();
    REQUIRE((s.winner == Player::Even) == some);
    if (s.strategy) CHECK(check_strategy(t, *s.strategy));
  }
}

TEST_CASE("relabel and shift") {
  auto t = diamond(Player::Odd, 1, 2);
  auto r = relabel_shape(t);
  CHECK(r.rank == Rank{0, 0});
  CHECK(*r[0].letter() == shape_letter());
  CHECK(r[3].is_bot());
  auto s = shift_priorities(t, 4);
  CHECK(s.rank == Rank{4, 6});
  CHECK(s[1].letter()->prio == 5);
  CHECK(s[3].is_bot());
  CHECK_THROWS_AS(shift_priorities(t, 3), PreconditionError);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto u = random_regular_tree({0, 3}, 6, {}, seed);
    CHECK(solve_tree(u).winner == solve_tree(shift_priorities(u, 2)).winner);
  }
}

TEST_CASE("random trees") {
  auto a = random_regular_tree({0, 2}, 8, {"X"}, 7);
  auto b = random_regular_tree({0, 2}, 8, {"X"}, 7);
  CHECK(tree_to_json(a) == tree_to_json(b));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto t = random_regular_tree({1, 4}, 1 + seed % 20, {"X", "Y"}, seed);
    REQUIRE(validate(t));
    for (auto& x : t.exits()) CHECK((x == "X" || x == "Y"));
  }
  CHECK_THROWS_AS(random_regular_tree({0, 0}, 0, {}, 1), PreconditionError);
}
