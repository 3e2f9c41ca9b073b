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


#include "zeta/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace zeta {

using json = nlohmann::ordered_json;

namespace {

void only_fields(const json& j, std::initializer_list<const char*> allowed, std::initializer_list<const char*> required,
                 const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto& [k, v] : j.items())
    if (!ok.count(k)) throw InputError(where + ": unknown field '" + k + "'");
  for (const char* r : required)
    if (!j.contains(r)) throw InputError(where + ": missing field '" + std::string(r) + "'");
}

template <class T>
T get(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

json rank_json(Rank r) { return {{"min", r.min}, {"max", r.max}}; }

Rank rank_from(const json& j) {
  only_fields(j, {"min", "max"}, {"min", "max"}, "rank");
  return {get<Priority>(j["min"], "rank.min"), get<Priority>(j["max"], "rank.max")};
}

json letter_json(const Letter& a) {
  if (a.bot) return "bot";
  return {{"player", a.player == Player::Even ? "E" : "O"}, {"prio", a.prio}};
}

Letter letter_from(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "bot") throw InputError(where + ": unknown letter " + j.dump());
    return Letter::bottom();
  }
  only_fields(j, {"player", "prio"}, {"player", "prio"}, where);
  auto p = get<std::string>(j["player"], where + ".player");
  if (p != "E" && p != "O") throw InputError(where + ": player must be \"E\" or \"O\"");
  return Letter::game(p == "E" ? Player::Even : Player::Odd, get<Priority>(j["prio"], where + ".prio"));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string automaton_to_json(const TreeAutomaton& a) {
  json j;
  j["rank"] = rank_json(a.rank());
  j["exits"] = a.exits();
  j["states"] = json::array();
  for (StateId q = 0; q < a.num_states(); ++q) {
    auto c = a.colors(q);
    j["states"].push_back({{"id", a.state_name(q)}, {"colors", std::vector<Priority>(c.begin(), c.end())}});
  }
  j["initial"] = json::array();
  for (StateId q : a.initial()) j["initial"].push_back(a.state_name(q));
  j["transitions"] = json::array();
  for (StateId q = 0; q < a.num_states(); ++q)
    for (auto& mv : a.moves(q))
      for (int d = 0; d < 2; ++d) {
        if (mv.to[d].empty()) continue;
        json to = json::array();
        for (StateId t : mv.to[d]) to.push_back(a.state_name(t));
        j["transitions"].push_back({{"letter", letter_json(mv.letter)}, {"dir", d}, {"from", a.state_name(q)}, {"to", to}});
      }
  j["finals"] = json::array();
  for (auto& [x, q] : a.finals()) j["finals"].push_back({{"exit", x}, {"state", a.state_name(q)}});
  return j.dump(2) + "\n";
}

TreeAutomaton automaton_from_json(const std::string& text) {
  json j = parse_json(text);
  only_fields(j, {"rank", "exits", "states", "initial", "transitions", "finals"},
              {"rank", "exits", "states", "initial", "transitions", "finals"}, "automaton");
  Rank rank = rank_from(j["rank"]);
  auto exits = get<std::vector<std::string>>(j["exits"], "exits");
  const json& states = j["states"];
  if (!states.is_array()) throw InputError("states: expected an array");
  std::size_t arity = 1;
  if (!states.empty() && states[0].is_object() && states[0].contains("colors") && states[0]["colors"].is_array())
    arity = states[0]["colors"].size();
  if (arity == 0) throw InputError("states: colors must not be empty");

  TreeAutomaton::Builder b(rank, arity);
  std::map<std::string, StateId> ids;
  for (auto& s : states) {
    only_fields(s, {"id", "colors"}, {"id", "colors"}, "state");
    auto id = get<std::string>(s["id"], "state.id");
    auto colors = get<std::vector<Priority>>(s["colors"], "state.colors");
    if (colors.size() != arity) throw InputError("state '" + id + "': colors length differs from the first state");
    if (ids.count(id)) throw InputError("duplicate state id '" + id + "'");
    ids[id] = b.add_state(id, colors);
  }
  auto state = [&](const json& v, const std::string& where) {
    auto name = get<std::string>(v, where);
    auto it = ids.find(name);
    if (it == ids.end()) throw InputError(where + ": unknown state '" + name + "'");
    return it->second;
  };
  std::set<std::string> declared(exits.begin(), exits.end());
  for (auto& x : exits) b.add_exit(x);
  for (auto& v : get<std::vector<json>>(j["initial"], "initial")) b.add_initial(state(v, "initial"));
  for (auto& t : get<std::vector<json>>(j["transitions"], "transitions")) {
    only_fields(t, {"letter", "dir", "from", "to"}, {"letter", "dir", "from", "to"}, "transition");
    Letter a = letter_from(t["letter"], "transition.letter");
    int dir = get<int>(t["dir"], "transition.dir");
    if (dir != 0 && dir != 1) throw InputError("transition.dir must be 0 or 1");
    StateId from = state(t["from"], "transition.from");
    for (auto& to : get<std::vector<json>>(t["to"], "transition.to")) b.add_transition(from, a, dir, state(to, "transition.to"));
  }
  for (auto& f : get<std::vector<json>>(j["finals"], "finals")) {
    only_fields(f, {"exit", "state"}, {"exit", "state"}, "final");
    auto x = get<std::string>(f["exit"], "final.exit");
    if (!declared.count(x)) throw InputError("final: undeclared exit '" + x + "'");
    b.add_final(x, state(f["state"], "final.state"));
  }
  try {
    return b.build();
  } catch (const InvariantViolation& e) {
    throw InputError(std::string("automaton: ") + e.what());
  }
}

std::string tree_to_json(const RegularTree& t) {
  json j;
  j["rank"] = rank_json(t.rank);
  j["root"] = t[t.root].id;
  j["nodes"] = json::array();
  for (auto& n : t.nodes) {
    json node;
    node["id"] = n.id;
    if (auto* x = n.exit()) {
      node["label"] = {{"exit", *x}};
    } else {
      node["label"] = letter_json(*n.letter());
      node["children"] = {t[n.children[0]].id, t[n.children[1]].id};
    }
    j["nodes"].push_back(node);
  }
  return j.dump(2) + "\n";
}

RegularTree tree_from_json(const std::string& text) {
  json j = parse_json(text);
  only_fields(j, {"rank", "root", "nodes"}, {"rank", "root", "nodes"}, "tree");
  RegularTree t;
  t.rank = rank_from(j["rank"]);
  auto nodes = get<std::vector<json>>(j["nodes"], "nodes");
  std::map<std::string, NodeId> ids;
  for (auto& n : nodes) {
    only_fields(n, {"id", "label", "children"}, {"id", "label"}, "node");
    auto id = get<std::string>(n["id"], "node.id");
    if (ids.count(id)) throw InputError("duplicate node id '" + id + "'");
    const json& label = n["label"];
    if (label.is_object() && label.contains("exit")) {
      only_fields(label, {"exit"}, {"exit"}, "node.label");
      if (n.contains("children")) throw InputError("node '" + id + "': exit nodes have no children");
      ids[id] = t.add_exit(id, get<std::string>(label["exit"], "node.label.exit"));
    } else {
      if (!n.contains("children")) throw InputError("node '" + id + "': letter nodes need two children");
      ids[id] = t.add(id, letter_from(label, "node '" + id + "' label"));
    }
  }
  for (auto& n : nodes) {
    if (!n.contains("children")) continue;
    NodeId self = ids.at(n["id"].get<std::string>());
    auto ch = get<std::vector<std::string>>(n["children"], "node.children");
    if (ch.size() != 2) throw InputError("node '" + t[self].id + "': exactly two children required");
    for (int d = 0; d < 2; ++d) {
      auto it = ids.find(ch[d]);
      if (it == ids.end()) throw InputError("node '" + t[self].id + "': unknown child '" + ch[d] + "'");
      t.nodes[self].children[d] = it->second;
    }
  }
  auto root = get<std::string>(j["root"], "root");
  auto it = ids.find(root);
  if (it == ids.end()) throw InputError("unknown root '" + root + "'");
  t.root = it->second;
  if (auto d = validate(t); !d) throw InputError("invalid tree: " + d.problems.front());
  return t;
}

std::string arena_to_json(const GameArena& g) {
  json j;
  j["dims"] = g.dims();
  j["positions"] = json::array();
  for (Pos v = 0; v < g.size(); ++v) {
    auto c = g.colors(v);
    j["positions"].push_back({{"id", v},
                              {"label", g.label(v)},
                              {"owner", g.owner(v) == Player::Even ? "E" : "O"},
                              {"colors", std::vector<Priority>(c.begin(), c.end())},
                              {"successors", g.successors(v)}});
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace zeta
