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

#include <string>

#include "zeta/automaton.hpp"
#include "zeta/games.hpp"
#include "zeta/regtree.hpp"

namespace zeta {

/// JSON text of an automaton; states keep their names.
std::string automaton_to_json(const TreeAutomaton& a);
/// Strict reader: unknown fields, unknown states and malformed letters are
/// InputErrors.
TreeAutomaton automaton_from_json(const std::string& text);

std::string tree_to_json(const RegularTree& t);
RegularTree tree_from_json(const std::string& text);

/// Debug dump of an arena with "owner" and "colors" per position.
std::string arena_to_json(const GameArena& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace zeta
