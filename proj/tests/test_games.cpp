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

#include <vector>

#include "doctest.h"
#include "zeta/games.hpp"
#include "zeta/oracle.hpp"

using namespace zeta;

namespace {

constexpr Player Eve = Player::Even;
constexpr Player Adam = Player::Odd;

void check_solution(const GameArena& g, const Solution& s) {
  auto eve = s.region(Eve);
  auto adam = s.region(Adam);
  CHECK(eve.size() + adam.size() == g.size());
  CHECK(verify_strategy(g, s.eve, eve));
  CHECK(verify_strategy(g, s.adam, adam));
}

}  // namespace

TEST_CASE("single self loops") {
  for (Priority c = 0; c < 4; ++c)
    for (Player owner : {Eve, Adam}) {
      GameArena g;
      g.add_position(owner, c);
      g.add_edge(0, 0);
      auto s = solve_parity(g);
      CHECK(s.winner[0] == (c % 2 == 0 ? Eve : Adam));
      check_solution(g, s);
    }
}

TEST_CASE("dead ends are lost by their owner") {
  GameArena g;
  g.add_position(Eve, 0);
  g.add_position(Adam, 0);
  CHECK(solve_parity(g).winner == std::vector<Player>{Adam, Eve});
}

TEST_CASE("choice between colors") {
  // Eve at 0 chooses between a 1-loop and a 2-loop.
  GameArena g;
  g.add_position(Eve, 0);
  g.add_position(Eve, 1);
  g.add_position(Eve, 2);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 1);
  g.add_edge(2, 2);
  auto s = solve_parity(g);
  CHECK(s.winner == std::vector<Player>{Eve, Adam, Eve});
  CHECK(s.eve.choice(0, 0) == 2);
  check_solution(g, s);
}

TEST_CASE("max priority on a cycle decides") {
  // Adam cycles 0 -> 1 -> 0 or escapes to a 4 loop.
  GameArena g;
  g.add_position(Adam, 3);
  g.add_position(Adam, 2);
  g.add_position(Adam, 4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(1, 2);
  g.add_edge(2, 2);
  auto s = solve_parity(g);
  CHECK(s.winner == std::vector<Player>{Adam, Adam, Eve});
  check_solution(g, s);
}

TEST_CASE("solve_parity rejects conjunctions") {
  GameArena g(2);
  g.add_position(Eve, {0, 0});
  CHECK_THROWS_AS(solve_parity(g), PreconditionError);
}

TEST_CASE("conjunction needs memory") {
  // Eve at 0 alternates between 1 (colors 2,1) and 2 (colors 1,2): either
  // single choice loses one dimension; alternating sees 2 in both.
  GameArena g(2);
  g.add_position(Eve, {0, 0});
  g.add_position(Eve, {2, 1});
  g.add_position(Eve, {1, 2});
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 0);
  g.add_edge(2, 0);
  auto s = solve_conjunction(g);
  CHECK(s.winner == std::vector<Player>{Eve, Eve, Eve});
  CHECK(s.eve.memory_size > 1);
  check_solution(g, s);
  CHECK(oracle::brute_solve_conjunction(g) == s.winner);
}

TEST_CASE("conjunction lost in one dimension") {
  GameArena g(2);
  g.add_position(Eve, {2, 1});
  g.add_edge(0, 0);
  auto s = solve(g);
  CHECK(s.winner[0] == Adam);
  check_solution(g, s);
}

TEST_CASE("conjunction with Adam choosing the bad dimension") {
  GameArena g(2);
  g.add_position(Adam, {0, 0});
  g.add_position(Adam, {2, 1});
  g.add_position(Adam, {1, 2});
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 0);
  g.add_edge(2, 0);
  auto s = solve(g);
  CHECK(s.winner == std::vector<Player>{Adam, Adam, Adam});
  check_solution(g, s);
}

TEST_CASE("product guard") {
  GameArena g(3);
  for (int i = 0; i < 4; ++i) g.add_position(Eve, {1, 3, 5});
  for (Pos i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
  CHECK_THROWS_AS(solve_conjunction(g, 2), GuardExceeded);
}

TEST_CASE("verify rejects losing strategies") {
  GameArena g;
  g.add_position(Eve, 0);
  g.add_position(Eve, 1);
  g.add_position(Eve, 2);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 1);
  g.add_edge(2, 2);
  std::vector<Pos> from{0};
  CHECK_FALSE(verify_strategy(g, Strategy::positional(Eve, {1, 1, 2}), from));
  CHECK(verify_strategy(g, Strategy::positional(Eve, {2, 1, 2}), from));
  auto bad = verify_strategy(g, Strategy::positional(Eve, {kNoPos, 1, 2}), from);
  CHECK_FALSE(bad);
  CHECK_FALSE(bad.diagnostic.empty());
}

TEST_CASE("verify catches Adam dead ends") {
  GameArena g;
  g.add_position(Eve, 1);
  g.add_position(Adam, 1);
  g.add_edge(0, 1);
  std::vector<Pos> from{0};
  CHECK(verify_strategy(g, Strategy::positional(Eve, {1, kNoPos}), from));
  CHECK_FALSE(verify_strategy(g, Strategy::positional(Adam, {kNoPos, kNoPos}), from));
}

TEST_CASE("parity solver agrees with exhaustive search") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto g = oracle::random_arena(1 + seed % 8, 1, 5, 3, seed);
    auto s = solve_parity(g);
    REQUIRE(oracle::brute_solve_parity(g) == s.winner);
    check_solution(g, s);
  }
}

TEST_CASE("conjunction solver agrees with exhaustive search") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto g = oracle::random_arena(1 + seed % 6, 2, 4, 3, seed);
    auto s = solve_conjunction(g);
    REQUIRE(oracle::brute_solve_conjunction(g) == s.winner);
    check_solution(g, s);
  }
}

TEST_CASE("dualization swaps winners") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto g = oracle::random_arena(2 + seed % 40, 1, 6, 3, seed);
    auto s = solve_parity(g);
    auto d = solve_parity(g.dual());
    for (Pos v = 0; v < g.size(); ++v) REQUIRE(d.winner[v] == opponent(s.winner[v]));
  }
}

TEST_CASE("larger random arenas produce verified strategies") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = oracle::random_arena(200, 1, 8, 4, seed);
    check_solution(g, solve_parity(g));
    auto h = oracle::random_arena(30, 2, 4, 3, seed);
    check_solution(h, solve(h));
  }
}

TEST_CASE("arena basics") {
  GameArena g;
  g.add_position(Eve, 0, "a");
  g.add_position(Adam, 1, "b");
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  CHECK(g.num_edges() == 1);
  CHECK(g.label(0) == "a");
  auto d = g.dual();
  CHECK(d.owner(0) == Adam);
  CHECK(d.color(1) == 2);
  CHECK_THROWS(g.add_position(Eve, std::vector<Priority>{0, 1}));
}
