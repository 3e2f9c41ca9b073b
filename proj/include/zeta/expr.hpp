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
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zeta/common.hpp"

namespace zeta {

/// Fixpoint binders. Mu is the least fixpoint, Nu the greatest one and
/// Zeta the mixed fixpoint whose iterations are won by Even.
enum class BinderKind : std::uint8_t { Mu, Zeta, Nu };

/// Binary connectives: Sum is +, CartProd is the cartesian product (x, "*")
/// and ParProd the parallel product ("@").
enum class ConnectiveKind : std::uint8_t { Sum, CartProd, ParProd };

const char* keyword(BinderKind k);
const char* symbol(ConnectiveKind k);

struct ExprNode;
struct VarNode;
struct BinderNode;
struct BinaryNode;

/// Immutable fixpoint expression. Copies share structure.
class Expr {
 public:
  Expr() = default;

  static Expr var(std::string name);
  static Expr binder(BinderKind kind, std::string name, Expr body);
  static Expr mu(std::string name, Expr body) { return binder(BinderKind::Mu, std::move(name), std::move(body)); }
  static Expr zeta(std::string name, Expr body) { return binder(BinderKind::Zeta, std::move(name), std::move(body)); }
  static Expr nu(std::string name, Expr body) { return binder(BinderKind::Nu, std::move(name), std::move(body)); }
  static Expr binary(ConnectiveKind op, Expr left, Expr right);
  static Expr sum(Expr l, Expr r) { return binary(ConnectiveKind::Sum, std::move(l), std::move(r)); }
  static Expr cart(Expr l, Expr r) { return binary(ConnectiveKind::CartProd, std::move(l), std::move(r)); }
  static Expr par(Expr l, Expr r) { return binary(ConnectiveKind::ParProd, std::move(l), std::move(r)); }

  bool empty() const { return node_ == nullptr; }
  const VarNode* as_var() const;
  const BinderNode* as_binder() const;
  const BinaryNode* as_binary() const;

  /// Structural equality (binder names included).
  friend bool operator==(const Expr& a, const Expr& b);

  /// Number of constructors in the tree.
  std::size_t size() const;

 private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ExprNode> node_;
};

struct VarNode {
  std::string name;
};
struct BinderNode {
  BinderKind kind;
  std::string name;
  Expr body;
};
struct BinaryNode {
  ConnectiveKind op;
  Expr left;
  Expr right;
};
struct ExprNode {
  std::variant<VarNode, BinderNode, BinaryNode> v;
};

struct ParseOptions {
  /// Reject expressions with free variables.
  bool closed = false;
};

/// Parses the ASCII surface syntax. Shorthands (0, T, 1, star, hat, tilde)
/// and the dual/base operators are eliminated; binders are renamed so that
/// every binder name is unique and distinct from the free variables.
Expr parse(std::string_view text, ParseOptions opts = {});

/// Canonical text. parse(print(e)) is alpha-equal to e.
std::string print(const Expr& e);

std::set<std::string> free_vars(const Expr& e);
bool is_closed(const Expr& e);

/// Equality up to consistent renaming of bound variables.
bool alpha_equal(const Expr& a, const Expr& b);

/// Shape of an expression: zeta becomes nu and @ becomes *.
Expr base(const Expr& e);

/// Polarity flip: swaps zeta/nu and the two products.
Expr dual(const Expr& e);

/// Capture-avoiding replacement of the free occurrences of x by f.
Expr substitute(const Expr& e, const std::string& x, const Expr& f);

/// Named expressions of the Weihrauch-problem table, with the parameterised
/// rows instantiated at k = 1. Keys are stable file-name friendly slugs.
const std::map<std::string, Expr>& figure_catalog();

/// Source text of each catalog entry, keyed like figure_catalog().
const std::map<std::string, std::string>& figure_catalog_sources();

}  // namespace zeta
