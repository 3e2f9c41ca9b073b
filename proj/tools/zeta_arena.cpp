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


// Command-line front end: parse, compile, classify, member, solve,
// answerable, witness, unfold.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zeta/analysis.hpp"
#include "zeta/automaton.hpp"
#include "zeta/expr.hpp"
#include "zeta/io.hpp"
#include "zeta/regtree.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zeta;

struct Options {
  std::string format = "text";
  std::string expr;
  std::string out;
  std::string tree;
  std::string automaton;
  std::string witness_dir;
  bool base = false;
  bool dual = false;
  unsigned depth = 3;
  std::uint64_t seed = 0;
};

bool as_json(const Options& o) { return o.format == "json"; }

std::string join(const std::set<std::string>& xs) {
  std::string out;
  for (auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) std::cout << text;
  else write_file(o.out, text);
}

int cmd_parse(const Options& o) {
  Expr e = parse(o.expr);
  auto fv = free_vars(e);
  if (as_json(o)) {
    std::cout << json{{"expr", print(e)}, {"free", std::vector<std::string>(fv.begin(), fv.end())}}.dump() << "\n";
  } else {
    std::cout << print(e) << "\nfree: " << join(fv) << "\n";
  }
  return 0;
}

Expr transformed(const Options& o) {
  Expr e = parse(o.expr);
  if (o.dual) e = dual(e);
  if (o.base) e = base(e);
  return e;
}

void summary(const Options& o, const TreeAutomaton& a) {
  auto& stream = o.out.empty() ? std::cerr : std::cout;
  if (as_json(o) && !o.out.empty()) {
    stream << json{{"states", a.num_states()}, {"rank", {{"min", a.rank().min}, {"max", a.rank().max}}}}.dump() << "\n";
  } else {
    stream << "states: " << a.num_states() << "\nrank: " << a.rank().min << ".." << a.rank().max << "\n";
  }
}

int cmd_compile(const Options& o) {
  auto a = compile(transformed(o));
  emit(o, automaton_to_json(a));
  summary(o, a);
  return 0;
}

int cmd_answerable(const Options& o) {
  Expr e = transformed(o);
  if (!is_closed(e)) throw InputError("answerable requires a closed expression");
  auto a = answerable_automaton(e);
  emit(o, automaton_to_json(a));
  summary(o, a);
  return 0;
}

int cmd_classify(const Options& o) {
  Expr e = parse(o.expr);
  if (!is_closed(e)) throw InputError("classify requires a closed expression; free: " + join(free_vars(e)));
  auto label = classify(e);
  std::vector<std::string> written;
  if (!o.witness_dir.empty()) {
    std::filesystem::create_directories(o.witness_dir);
    auto put = [&](const std::optional<RegularTree>& t, const std::string& name) {
      if (!t) return;
      auto path = (std::filesystem::path(o.witness_dir) / name).string();
      write_file(path, tree_to_json(*t));
      written.push_back(path);
    };
    put(label.in_l, "in_l.json");
    put(label.in_l_minus_w, "in_l_minus_w.json");
  }
  if (as_json(o)) {
    std::cout << json{{"label", label.str()}, {"witnesses", written}}.dump() << "\n";
  } else {
    std::cout << label.str() << "\n";
    for (auto& w : written) std::cout << "witness: " << w << "\n";
  }
  return 0;
}

int cmd_member(const Options& o) {
  auto t = tree_from_json(read_file(o.tree));
  auto a = automaton_from_json(read_file(o.automaton));
  bool in = member(t, a);
  std::cout << (as_json(o) ? json{{"member", in}}.dump() : std::string(in ? "true" : "false")) << "\n";
  return 0;
}

int cmd_solve(const Options& o) {
  auto t = tree_from_json(read_file(o.tree));
  auto s = solve_tree(t);
  if (as_json(o)) {
    json j{{"winner", to_string(s.winner)}};
    if (s.strategy) {
      json m = json::object();
      for (auto [n, d] : *s.strategy) m[t[n].id] = d;
      j["strategy"] = m;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << to_string(s.winner) << "\n";
  if (s.strategy)
    for (auto [n, d] : *s.strategy) std::cout << t[n].id << "→" << d << "\n";
  return 0;
}

int cmd_witness(const Options& o) {
  auto a = automaton_from_json(read_file(o.automaton));
  if (is_empty(a)) throw InputError("the automaton accepts no tree");
  auto t = witness(a, o.seed);
  emit(o, tree_to_json(t));
  if (!o.out.empty()) std::cout << "nodes: " << t.size() << "\n";
  return 0;
}

int cmd_unfold(const Options& o) {
  auto t = tree_from_json(read_file(o.tree));
  auto u = unfold(t, o.depth);
  if (!as_json(o)) {
    std::cout << render_levels(u);
    return 0;
  }
  auto to_json = [](auto&& self, const UnfoldedTree& n) -> json {
    json j{{"label", n.label}};
    if (!n.children.empty()) {
      j["children"] = json::array();
      for (auto& c : n.children) j["children"].push_back(self(self, c));
    }
    return j;
  };
  std::cout << to_json(to_json, u).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeta-arena: compile and analyse fixpoint expressions over game trees"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* parse_cmd = app.add_subcommand("parse", "Print the canonical form and the free variables");
  parse_cmd->add_option("expr", o.expr)->required();

  auto* compile_cmd = app.add_subcommand("compile", "Compile an expression to an automaton");
  compile_cmd->add_option("expr", o.expr)->required();
  compile_cmd->add_option("--out", o.out, "Automaton JSON file (default: stdout)");
  compile_cmd->add_flag("--base", o.base, "Apply the base map first");
  compile_cmd->add_flag("--dual", o.dual, "Apply dualisation first");

  auto* classify_cmd = app.add_subcommand("classify", "EMPTY, POINTED(i..k) or TOP");
  classify_cmd->add_option("expr", o.expr)->required();
  classify_cmd->add_option("--witness-dir", o.witness_dir, "Directory for witness trees");

  auto* member_cmd = app.add_subcommand("member", "Tree membership");
  member_cmd->add_option("tree", o.tree)->required();
  member_cmd->add_option("automaton", o.automaton)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Winner of a game tree and an Even strategy");
  solve_cmd->add_option("tree", o.tree)->required();

  auto* answerable_cmd = app.add_subcommand("answerable", "Automaton of the Even-won trees of an expression");
  answerable_cmd->add_option("expr", o.expr)->required();
  answerable_cmd->add_option("--out", o.out, "Automaton JSON file (default: stdout)");

  auto* witness_cmd = app.add_subcommand("witness", "A tree accepted by an automaton");
  witness_cmd->add_option("automaton", o.automaton)->required();
  witness_cmd->add_option("--out", o.out, "Tree JSON file (default: stdout)");
  witness_cmd->add_option("--seed", o.seed, "Strategy seed (0 = canonical)");

  auto* unfold_cmd = app.add_subcommand("unfold", "Depth-bounded expansion of a tree");
  unfold_cmd->add_option("tree", o.tree)->required();
  unfold_cmd->add_option("--depth", o.depth, "Depth")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(o);
    if (compile_cmd->parsed()) return cmd_compile(o);
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (member_cmd->parsed()) return cmd_member(o);
    if (solve_cmd->parsed()) return cmd_solve(o);
    if (answerable_cmd->parsed()) return cmd_answerable(o);
    if (witness_cmd->parsed()) return cmd_witness(o);
    if (unfold_cmd->parsed()) return cmd_unfold(o);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
