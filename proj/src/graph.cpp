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


#include "zeta/graph.hpp"

#include <algorithm>
#include <utility>

namespace zeta {

std::vector<std::vector<std::uint32_t>> strongly_connected(const Digraph& g, const std::vector<std::uint32_t>& nodes) {
  constexpr std::uint32_t kUnset = UINT32_MAX;
  const auto n = g.size();
  std::vector<char> alive(n, 0);
  for (auto v : nodes) alive[v] = 1;
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::vector<std::vector<std::uint32_t>> out;
  std::uint32_t counter = 0;

  for (auto root : nodes) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < g[v].size()) {
        auto w = g[v][i++];
        if (!alive[w]) continue;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      auto done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::uint32_t> comp;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

bool is_cyclic(const Digraph& g, const std::vector<std::uint32_t>& component) {
  if (component.size() > 1) return true;
  if (component.empty()) return false;
  auto v = component.front();
  return std::find(g[v].begin(), g[v].end(), v) != g[v].end();
}

std::vector<std::uint32_t> reachable(const Digraph& g, const std::vector<std::uint32_t>& from) {
  std::vector<char> seen(g.size(), 0);
  std::vector<std::uint32_t> out;
  for (auto v : from)
    if (!seen[v]) {
      seen[v] = 1;
      out.push_back(v);
    }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto w : g[out[i]])
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  return out;
}

}  // namespace zeta
