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


#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeta/automaton.hpp"
#include "zeta/expr.hpp"
#include "zeta/games.hpp"
#include "zeta/regtree.hpp"

namespace zeta::oracle {

/// Exhaustive solver over positional strategies of both players. At most
/// 8 positions, one dimension.
std::vector<Player> brute_solve_parity(const GameArena& arena);

/// Exhaustive solver for conjunctions: enumerates positional Adam
/// strategies and searches the residual graphs for strongly connected sets
/// that are even in every dimension. At most 6 positions, 1 or 2
/// dimensions.
std::vector<Player> brute_solve_conjunction(const GameArena& arena);

/// Membership by enumerating Eve's positional strategies in the
/// membership game, without a game solver. Plain parity automata only; at
/// most 64 reachable (node, state) pairs.
bool brute_member(const RegularTree& t, const TreeAutomaton& a);

/// Random expression of the given depth over `vars`, deterministic in the
/// seed; closed when vars is empty.
Expr random_expr(unsigned depth, const std::vector<std::string>& vars, std::uint64_t seed);

/// Random arena with out-degree at most `max_degree`, deterministic in the
/// seed. Some positions may be dead ends.
GameArena random_arena(std::size_t positions, std::size_t dims, Priority max_color, std::size_t max_degree,
                       std::uint64_t seed);

}  // namespace zeta::oracle
