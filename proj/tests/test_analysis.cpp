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

#include <filesystem>
#include <string>

#include "doctest.h"
#include "zeta/analysis.hpp"
#include "zeta/io.hpp"
#include "zeta/oracle.hpp"

using namespace zeta;

namespace {

std::string fixture_path(const std::string& name) { return std::string(ZETA_FIXTURES) + "/" + name; }
RegularTree tree_fixture(const std::string& name) { return tree_from_json(read_file(fixture_path(name))); }
TreeAutomaton aut_fixture(const std::string& name) { return automaton_from_json(read_file(fixture_path(name))); }

std::string label_of(const std::string& text) { return classify(parse(text, {.closed = true})).str(); }

}  // namespace

TEST_CASE("emptiness") {
  CHECK(is_empty(compile(parse("mu X. X"))));
  CHECK(is_empty(compile(parse("0"))));
  CHECK_FALSE(is_empty(compile(parse("T"))));
  CHECK_FALSE(is_empty(compile(parse("1"))));
  CHECK(is_empty(compile(parse("0 * T"))));
  CHECK_FALSE(is_empty(compile(parse("0 + T"))));
  CHECK_FALSE(is_empty(compile(parse("X"))));
  CHECK(is_empty(empty_automaton()));
  CHECK_THROWS_AS(witness(empty_automaton()), PreconditionError);
}

TEST_CASE("emptiness game shape") {
  auto g = emptiness_game(compile(parse("zeta X. X")));
  CHECK(g.initial.size() == 1);
  CHECK(g.arena.size() == g.info.size());
  for (Pos v = 0; v < g.arena.size(); ++v) {
    using Kind = EmptinessGame::Kind;
    auto k = g.info[v].kind;
    CHECK(g.arena.owner(v) == (k == Kind::State || k == Kind::Direction ? Player::Even : Player::Odd));
  }
}

TEST_CASE("witnesses of the identity fixpoints") {
  auto z = witness(compile(parse("zeta X. X")));
  auto n = witness(compile(parse("nu X. X")));
  CHECK(tree_to_json(z) == tree_to_json(minimize(spine_tree(0))));
  CHECK(render_levels(unfold(n, 2)) == render_levels(unfold(spine_tree(1), 2)));
  CHECK(z.size() == 2);
  CHECK(n.size() == 2);
}

TEST_CASE("witnesses are members") {
  for (const char* text : {"zeta X. 1 + X * X", "mu X. T + X @ X", "nu X. X + T", "X * Y", "zeta X. X + Y",
                           "mu X. nu Y. X + Y", "tilde(zeta X. X + 1)"}) {
    auto a = compile(parse(text));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto w = witness(a, seed);
      CHECK(validate(w));
      CHECK(member(w, a));
    }
  }
}

TEST_CASE("witness exits") {
  auto a = compile(parse("X * Y"));
  auto w = witness(a);
  CHECK(w.exits() == std::set<std::string>{"X", "Y"});
  CHECK(w.size() == 3);
}

TEST_CASE("minimization") {
  RegularTree t;
  auto a = t.add("a", Letter::game(Player::Even, 0));
  auto b = t.add("b", Letter::game(Player::Even, 0));
  auto bot1 = t.add("x", Letter::bottom());
  auto bot2 = t.add("y", Letter::bottom());
  t.set_children(a, b, bot1);
  t.set_children(b, a, bot2);
  t.set_children(bot1, bot2, bot2);
  t.set_children(bot2, bot1, bot1);
  auto m = minimize(t);
  CHECK(m.size() == 2);
  CHECK(validate(m));
  CHECK(member(m, compile(parse("zeta X. X"))));
}

TEST_CASE("membership") {
  auto z = compile(parse("zeta X. X"));
  CHECK(member(spine_tree(0), z));
  CHECK_FALSE(member(spine_tree(1), z));
  RegularTree x;
  x.add_exit("x", "X");
  CHECK_THROWS_AS(member(x, z), PreconditionError);
  RegularTree broken;
  CHECK_THROWS_AS(member(broken, z), PreconditionError);
}

TEST_CASE("membership agrees with the backtracking oracle") {
  std::vector<TreeAutomaton> autos;
  for (const char* text : {"zeta X. X", "nu X. X", "zeta X. 1 + X * X", "mu X. T + X @ X", "nu X. X + T"})
    autos.push_back(compile(parse(text)));
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto t = random_regular_tree({0, 1}, 1 + seed % 6, {}, seed);
    for (auto& a : autos) {
      try {
        bool b = oracle::brute_member(t, a);
        REQUIRE(member(t, a) == b);
        ++compared;
      } catch (const GuardExceeded&) {
      }
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("hand-written automata") {
  auto wkl = aut_fixture("automata/wkl.aut.json");
  CHECK(member(tree_fixture("automata/wkl_full_binary.tree.json"), wkl));
  CHECK_FALSE(member(tree_fixture("automata/wkl_bare_leaf.tree.json"), wkl));
  CHECK(member(tree_fixture("automata/wkl_finite_leaf.tree.json"), wkl));
  auto wf = aut_fixture("automata/mu_wf.aut.json");
  CHECK(member(tree_fixture("automata/wf_two_nodes.tree.json"), wf));
  CHECK_FALSE(member(tree_fixture("automata/wf_infinite_spine.tree.json"), wf));
  auto cd = aut_fixture("automata/clopen_det.aut.json");
  CHECK(member(witness(cd), cd));
}

TEST_CASE("answerable") {
  auto a = answerable_automaton(parse("zeta X. 1 + X * X"));
  CHECK(a.arity() == 2);
  auto w = witness(a);
  CHECK(solve_tree(w).winner == Player::Even);
  CHECK(is_empty(answerable_automaton(parse("nu X. X"))));
  CHECK_FALSE(is_empty(answerable_automaton(parse("zeta X. X"))));
  CHECK(is_empty(answerable_automaton(parse("mu X. X"))));
  CHECK_THROWS_AS(answerable_automaton(parse("X")), PreconditionError);
}

TEST_CASE("classification") {
  CHECK(label_of("mu X. X") == "EMPTY");
  CHECK(label_of("zeta X. X") == "POINTED(0..0)");
  CHECK(label_of("nu X. X") == "TOP");
  CHECK(label_of("zeta X. 1 + X * X") == "TOP");
  CHECK(label_of("mu X. nu Y. X + Y") == "TOP");
  CHECK(label_of("mu X. T + X @ X") == "POINTED(0..0)");
  CHECK_THROWS_AS(classify(parse("X")), PreconditionError);
}

TEST_CASE("classification is coherent") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto e = oracle::random_expr(1 + seed % 4, {}, seed);
    auto c = classify(e);
    auto a = compile(e);
    CHECK(c.rank == a.rank());
    switch (c.kind) {
      case ClassLabel::Kind::Empty:
        CHECK(is_empty(a));
        CHECK_FALSE(c.in_l);
        break;
      case ClassLabel::Kind::Pointed:
        REQUIRE(c.in_l);
        CHECK(member(*c.in_l, a));
        CHECK(solve_tree(*c.in_l).winner == Player::Even);
        CHECK_FALSE(c.in_l_minus_w);
        break;
      case ClassLabel::Kind::Top:
        REQUIRE(c.in_l_minus_w);
        CHECK(member(*c.in_l_minus_w, a));
        CHECK(solve_tree(*c.in_l_minus_w).winner == Player::Odd);
        break;
    }
  }
}

TEST_CASE("every witness of a pointed language is won by Even") {
  auto a = compile(parse("mu X. T + X @ X"));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto w = witness(a, seed);
    REQUIRE(member(w, a));
    CHECK(solve_tree(w).winner == Player::Even);
  }
}

TEST_CASE("catalog") {
  auto names = figure_catalog();
  CHECK(names.size() == 15);
  for (auto& [name, e] : names) {
    auto c = classify(e);
    std::string want = name == "zero" ? "EMPTY" : name == "top" ? "POINTED(0..0)" : "TOP";
    CHECK_MESSAGE(c.str() == want, name);
  }
}
