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
#include <vector>

namespace zeta {

/// Adjacency lists over dense node ids.
using Digraph = std::vector<std::vector<std::uint32_t>>;

/// Strongly connected components of the subgraph induced by `nodes`, in
/// reverse topological order.
std::vector<std::vector<std::uint32_t>> strongly_connected(const Digraph& g, const std::vector<std::uint32_t>& nodes);

/// True when the component has an internal edge (two or more nodes, or a
/// self-loop).
bool is_cyclic(const Digraph& g, const std::vector<std::uint32_t>& component);

/// Nodes reachable from `from`, in discovery order.
std::vector<std::uint32_t> reachable(const Digraph& g, const std::vector<std::uint32_t>& from);

}  // namespace zeta
