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

#include "zeta/expr.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <utility>

namespace zeta {

const char* keyword(BinderKind k) {
  switch (k) {
    case BinderKind::Mu: return "mu";
    case BinderKind::Zeta: return "zeta";
    case BinderKind::Nu: return "nu";
  }
  return "?";
}

const char* symbol(ConnectiveKind k) {
  switch (k) {
    case ConnectiveKind::Sum: return "+";
    case ConnectiveKind::CartProd: return "*";
    case ConnectiveKind::ParProd: return "@";
  }
  return "?";
}

Expr Expr::var(std::string name) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{VarNode{std::move(name)}}));
}

Expr Expr::binder(BinderKind kind, std::string name, Expr body) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{BinderNode{kind, std::move(name), std::move(body)}}));
}

Expr Expr::binary(ConnectiveKind op, Expr left, Expr right) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{BinaryNode{op, std::move(left), std::move(right)}}));
}

const VarNode* Expr::as_var() const { return node_ ? std::get_if<VarNode>(&node_->v) : nullptr; }
const BinderNode* Expr::as_binder() const { return node_ ? std::get_if<BinderNode>(&node_->v) : nullptr; }
const BinaryNode* Expr::as_binary() const { return node_ ? std::get_if<BinaryNode>(&node_->v) : nullptr; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (auto* x = a.as_var()) {
    auto* y = b.as_var();
    return y && x->name == y->name;
  }
  if (auto* x = a.as_binder()) {
    auto* y = b.as_binder();
    return y && x->kind == y->kind && x->name == y->name && x->body == y->body;
  }
  auto* x = a.as_binary();
  auto* y = b.as_binary();
  return y && x->op == y->op && x->left == y->left && x->right == y->right;
}

std::size_t Expr::size() const {
  if (!node_) return 0;
  if (as_var()) return 1;
  if (auto* b = as_binder()) return 1 + b->body.size();
  auto* c = as_binary();
  return 1 + c->left.size() + c->right.size();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum class Level { Expr, Sum, Prod, Atom };

void print_into(const Expr& e, Level ctx, std::string& out) {
  if (auto* v = e.as_var()) {
    out += v->name;
    return;
  }
  if (auto* b = e.as_binder()) {
    bool parens = ctx != Level::Expr;
    if (parens) out += '(';
    out += keyword(b->kind);
    out += ' ';
    out += b->name;
    out += ". ";
    print_into(b->body, Level::Expr, out);
    if (parens) out += ')';
    return;
  }
  auto* c = e.as_binary();
  Level own = c->op == ConnectiveKind::Sum ? Level::Sum : Level::Prod;
  bool parens = static_cast<int>(ctx) > static_cast<int>(own);
  if (parens) out += '(';
  // left-associative: the left operand may sit at the same level
  print_into(c->left, own, out);
  out += ' ';
  out += symbol(c->op);
  out += ' ';
  print_into(c->right, own == Level::Sum ? Level::Prod : Level::Atom, out);
  if (parens) out += ')';
}

}  // namespace

std::string print(const Expr& e) {
  std::string out;
  print_into(e, Level::Expr, out);
  return out;
}

// ---------------------------------------------------------------------------
// Variables

namespace {

void collect_free(const Expr& e, std::set<std::string>& bound, std::set<std::string>& out) {
  if (auto* v = e.as_var()) {
    if (!bound.count(v->name)) out.insert(v->name);
  } else if (auto* b = e.as_binder()) {
    bool fresh = bound.insert(b->name).second;
    collect_free(b->body, bound, out);
    if (fresh) bound.erase(b->name);
  } else if (auto* c = e.as_binary()) {
    collect_free(c->left, bound, out);
    collect_free(c->right, bound, out);
  }
}

void collect_names(const Expr& e, std::set<std::string>& out) {
  if (auto* v = e.as_var()) {
    out.insert(v->name);
  } else if (auto* b = e.as_binder()) {
    out.insert(b->name);
    collect_names(b->body, out);
  } else if (auto* c = e.as_binary()) {
    collect_names(c->left, out);
    collect_names(c->right, out);
  }
}

std::string fresh_variant(const std::string& stem, const std::set<std::string>& avoid) {
  for (unsigned i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

}  // namespace

std::set<std::string> free_vars(const Expr& e) {
  std::set<std::string> bound, out;
  collect_free(e, bound, out);
  return out;
}

bool is_closed(const Expr& e) { return free_vars(e).empty(); }

bool alpha_equal(const Expr& a, const Expr& b) {
  // Each side maps a bound name to the depth of its binder.
  std::map<std::string, int> env_a, env_b;
  std::function<bool(const Expr&, const Expr&, int)> go = [&](const Expr& x, const Expr& y, int depth) {
    if (auto* vx = x.as_var()) {
      auto* vy = y.as_var();
      if (!vy) return false;
      auto ia = env_a.find(vx->name);
      auto ib = env_b.find(vy->name);
      if (ia == env_a.end() || ib == env_b.end()) return ia == env_a.end() && ib == env_b.end() && vx->name == vy->name;
      return ia->second == ib->second;
    }
    if (auto* bx = x.as_binder()) {
      auto* by = y.as_binder();
      if (!by || bx->kind != by->kind) return false;
      auto saved_a = env_a.find(bx->name) != env_a.end() ? std::optional<int>(env_a[bx->name]) : std::nullopt;
      auto saved_b = env_b.find(by->name) != env_b.end() ? std::optional<int>(env_b[by->name]) : std::nullopt;
      env_a[bx->name] = depth;
      env_b[by->name] = depth;
      bool ok = go(bx->body, by->body, depth + 1);
      if (saved_a) env_a[bx->name] = *saved_a; else env_a.erase(bx->name);
      if (saved_b) env_b[by->name] = *saved_b; else env_b.erase(by->name);
      return ok;
    }
    auto* cx = x.as_binary();
    auto* cy = y.as_binary();
    return cy && cx->op == cy->op && go(cx->left, cy->left, depth) && go(cx->right, cy->right, depth);
  };
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return go(a, b, 0);
}

// ---------------------------------------------------------------------------
// Syntactic maps

Expr base(const Expr& e) {
  if (e.as_var()) return e;
  if (auto* b = e.as_binder()) {
    BinderKind k = b->kind == BinderKind::Zeta ? BinderKind::Nu : b->kind;
    return Expr::binder(k, b->name, base(b->body));
  }
  auto* c = e.as_binary();
  ConnectiveKind op = c->op == ConnectiveKind::ParProd ? ConnectiveKind::CartProd : c->op;
  return Expr::binary(op, base(c->left), base(c->right));
}

Expr dual(const Expr& e) {
  if (e.as_var()) return e;
  if (auto* b = e.as_binder()) {
    BinderKind k = b->kind;
    if (k == BinderKind::Zeta) k = BinderKind::Nu;
    else if (k == BinderKind::Nu) k = BinderKind::Zeta;
    return Expr::binder(k, b->name, dual(b->body));
  }
  auto* c = e.as_binary();
  ConnectiveKind op = c->op;
  if (op == ConnectiveKind::CartProd) op = ConnectiveKind::ParProd;
  else if (op == ConnectiveKind::ParProd) op = ConnectiveKind::CartProd;
  return Expr::binary(op, dual(c->left), dual(c->right));
}

Expr substitute(const Expr& e, const std::string& x, const Expr& f) {
  if (auto* v = e.as_var()) return v->name == x ? f : e;
  if (auto* b = e.as_binder()) {
    if (b->name == x) return e;
    auto body_free = free_vars(b->body);
    if (!body_free.count(x)) return e;
    auto f_free = free_vars(f);
    if (!f_free.count(b->name)) return Expr::binder(b->kind, b->name, substitute(b->body, x, f));
    std::set<std::string> avoid = f_free;
    collect_names(b->body, avoid);
    avoid.insert(x);
    std::string renamed = fresh_variant(b->name, avoid);
    Expr body = substitute(b->body, b->name, Expr::var(renamed));
    return Expr::binder(b->kind, renamed, substitute(body, x, f));
  }
  auto* c = e.as_binary();
  return Expr::binary(c->op, substitute(c->left, x, f), substitute(c->right, x, f));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, Keyword, Zero, One, Dot, Plus, Star, At, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"mu", "nu", "zeta", "T", "hat", "tilde", "star", "dual", "base"};
  return k;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word(s.substr(i, j - i));
      out.push_back({keywords().count(word) ? Tok::Keyword : Tok::Ident, word, i});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '0': k = Tok::Zero; break;
      case '1': k = Tok::One; break;
      case '.': k = Tok::Dot; break;
      case '+': k = Tok::Plus; break;
      case '*': k = Tok::Star; break;
      case '@': k = Tok::At; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Concrete syntax before shorthand elimination.
struct Raw {
  enum class Kind { Var, Binder, Binary, Zero, Top, One, Hat, Tilde, Star, Dual, Base } kind;
  std::string name;
  BinderKind binder{};
  ConnectiveKind op{};
  std::vector<Raw> kids;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Raw parse_all() {
    Raw r = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return r;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().kind == Tok::End ? msg + " (end of input)" : msg, peek().pos);
  }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what);
    ++at_;
  }

  Raw expr() {
    const Token& t = peek();
    if (t.kind == Tok::Keyword && (t.text == "mu" || t.text == "nu" || t.text == "zeta")) {
      ++at_;
      Raw r{Raw::Kind::Binder, "", {}, {}, {}};
      r.binder = t.text == "mu" ? BinderKind::Mu : t.text == "nu" ? BinderKind::Nu : BinderKind::Zeta;
      if (peek().kind != Tok::Ident) fail("expected a variable after '" + t.text + "'");
      r.name = next().text;
      expect(Tok::Dot, "'.'");
      r.kids.push_back(expr());
      return r;
    }
    return sum();
  }

  Raw sum() {
    Raw left = prod();
    while (peek().kind == Tok::Plus) {
      ++at_;
      Raw right = prod();
      left = Raw{Raw::Kind::Binary, "", {}, ConnectiveKind::Sum, {std::move(left), std::move(right)}};
    }
    return left;
  }

  Raw prod() {
    Raw left = atom();
    while (peek().kind == Tok::Star || peek().kind == Tok::At) {
      ConnectiveKind op = next().kind == Tok::Star ? ConnectiveKind::CartProd : ConnectiveKind::ParProd;
      Raw right = atom();
      left = Raw{Raw::Kind::Binary, "", {}, op, {std::move(left), std::move(right)}};
    }
    return left;
  }

  Raw atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        ++at_;
        return Raw{Raw::Kind::Var, t.text, {}, {}, {}};
      case Tok::Zero:
        ++at_;
        return Raw{Raw::Kind::Zero, "", {}, {}, {}};
      case Tok::One:
        ++at_;
        return Raw{Raw::Kind::One, "", {}, {}, {}};
      case Tok::LParen: {
        ++at_;
        Raw r = expr();
        expect(Tok::RParen, "')'");
        return r;
      }
      case Tok::Keyword: {
        if (t.text == "T") {
          ++at_;
          return Raw{Raw::Kind::Top, "", {}, {}, {}};
        }
        Raw::Kind k;
        if (t.text == "hat") k = Raw::Kind::Hat;
        else if (t.text == "tilde") k = Raw::Kind::Tilde;
        else if (t.text == "star") k = Raw::Kind::Star;
        else if (t.text == "dual") k = Raw::Kind::Dual;
        else if (t.text == "base") k = Raw::Kind::Base;
        else fail("binder '" + t.text + "' must be parenthesised here");
        ++at_;
        expect(Tok::LParen, "'(' after '" + std::string(t.text) + "'");
        Raw r{k, "", {}, {}, {}};
        r.kids.push_back(expr());
        expect(Tok::RParen, "')'");
        return r;
      }
      default:
        fail("expected an expression");
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

void raw_idents(const Raw& r, std::set<std::string>& out) {
  if (r.kind == Raw::Kind::Var || r.kind == Raw::Kind::Binder) out.insert(r.name);
  for (auto& k : r.kids) raw_idents(k, out);
}

void raw_free(const Raw& r, std::set<std::string>& bound, std::set<std::string>& out) {
  if (r.kind == Raw::Kind::Var) {
    if (!bound.count(r.name)) out.insert(r.name);
    return;
  }
  if (r.kind == Raw::Kind::Binder) {
    bool fresh = bound.insert(r.name).second;
    raw_free(r.kids[0], bound, out);
    if (fresh) bound.erase(r.name);
    return;
  }
  for (auto& k : r.kids) raw_free(k, bound, out);
}

// Shorthand elimination and alpha-normalisation, in pre-order so that the
// fresh names F1, F2, ... are allotted outside-in.
class Elaborator {
 public:
  explicit Elaborator(std::set<std::string> taken) : taken_(std::move(taken)) {}

  Expr run(const Raw& r, std::map<std::string, std::string>& env) {
    switch (r.kind) {
      case Raw::Kind::Var: {
        auto it = env.find(r.name);
        return Expr::var(it == env.end() ? r.name : it->second);
      }
      case Raw::Kind::Binder: {
        std::string name = r.name;
        if (taken_binders_.count(name) || free_.count(name)) name = fresh_variant(r.name, all_taken());
        taken_binders_.insert(name);
        taken_.insert(name);
        auto saved = env.find(r.name) != env.end() ? std::optional<std::string>(env[r.name]) : std::nullopt;
        env[r.name] = name;
        Expr body = run(r.kids[0], env);
        if (saved) env[r.name] = *saved; else env.erase(r.name);
        return Expr::binder(r.binder, name, std::move(body));
      }
      case Raw::Kind::Binary: {
        Expr l = run(r.kids[0], env);
        Expr rr = run(r.kids[1], env);
        return Expr::binary(r.op, std::move(l), std::move(rr));
      }
      case Raw::Kind::Zero: {
        auto x = fresh();
        return Expr::mu(x, Expr::var(x));
      }
      case Raw::Kind::Top: {
        auto x = fresh();
        return Expr::zeta(x, Expr::var(x));
      }
      case Raw::Kind::One: {
        auto x = fresh();
        return Expr::nu(x, Expr::var(x));
      }
      case Raw::Kind::Hat: {
        auto x = fresh();
        Expr inner = run(r.kids[0], env);
        return Expr::zeta(x, Expr::par(std::move(inner), Expr::var(x)));
      }
      case Raw::Kind::Tilde: {
        auto x = fresh();
        Expr inner = run(r.kids[0], env);
        return Expr::nu(x, Expr::cart(std::move(inner), Expr::var(x)));
      }
      case Raw::Kind::Star: {
        auto x = fresh();
        auto t = fresh();
        Expr inner = run(r.kids[0], env);
        return Expr::mu(x, Expr::sum(Expr::zeta(t, Expr::var(t)), Expr::par(std::move(inner), Expr::var(x))));
      }
      case Raw::Kind::Dual:
        return dual(run(r.kids[0], env));
      case Raw::Kind::Base:
        return base(run(r.kids[0], env));
    }
    throw InvariantViolation("unknown raw expression kind");
  }

  void set_free(std::set<std::string> f) { free_ = std::move(f); }

 private:
  std::string fresh() {
    while (true) {
      std::string candidate = "F" + std::to_string(++counter_);
      if (!taken_.count(candidate)) {
        taken_.insert(candidate);
        taken_binders_.insert(candidate);
        return candidate;
      }
    }
  }
  std::set<std::string> all_taken() const { return taken_; }

  std::set<std::string> taken_;
  std::set<std::string> taken_binders_;
  std::set<std::string> free_;
  unsigned counter_ = 0;
};

}  // namespace

Expr parse(std::string_view text, ParseOptions opts) {
  Parser p(tokenize(text));
  Raw raw = p.parse_all();

  std::set<std::string> idents, bound, free;
  raw_idents(raw, idents);
  raw_free(raw, bound, free);
  if (opts.closed && !free.empty()) {
    throw PreconditionError("unbound variable '" + *free.begin() + "' in a closed expression");
  }
  Elaborator el(idents);
  el.set_free(free);
  std::map<std::string, std::string> env;
  return el.run(raw, env);
}

// ---------------------------------------------------------------------------
// Catalog

const std::map<std::string, std::string>& figure_catalog_sources() {
  static const std::map<std::string, std::string> sources = {
      {"WS_Sigma02_2", "zeta X2. nu X1. zeta X0. hat(tilde(X0 + X1 + X2))"},
      {"WS_Delta02", "mu Z. zeta X. hat(tilde(X)) + (nu Y. hat(tilde(Y)) + Z)"},
      {"sTC_Baire", "(nu X. hat(X + T)) * (zeta X. tilde(X + 1))"},
      {"C_Baire", "zeta X. tilde(X + 1)"},
      {"WS_Delta01", "mu X. hat(tilde(X)) + T + 1"},
      {"KL", "zeta X. (nu Y. X + Y) * (nu Y. X + Y)"},
      {"lim", "hat((nu X. X + T) * (zeta X. X + 1))"},
      {"WKL", "zeta X. 1 + X * X"},
      {"RT1_1", "zeta X. nu Y. X + Y"},
      {"LPO_prime", "(nu X. zeta Y. X + Y) * (zeta X. nu Y. X + Y)"},
      {"C_N", "tilde(zeta X. X + 1)"},
      {"LPO", "(nu X. X + T) * (zeta X. X + 1)"},
      {"C_1", "zeta X. X + 1"},
      {"top", "zeta X. X"},
      {"zero", "mu X. X"},
  };
  return sources;
}

const std::map<std::string, Expr>& figure_catalog() {
  static const std::map<std::string, Expr> catalog = [] {
    std::map<std::string, Expr> m;
    for (auto& [name, src] : figure_catalog_sources()) m.emplace(name, parse(src, {.closed = true}));
    return m;
  }();
  return catalog;
}

}  // namespace zeta
