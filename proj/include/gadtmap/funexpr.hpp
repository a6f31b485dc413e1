#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gadtmap/type.hpp"

namespace gadtmap {

/// A symbolic function variable. Root inputs are `f`s, step-(i) variables
/// are `g`s and per-constructor variables are `h`s; `Free` marks the
/// canonically renamed free variables of a most general form (f'1, f'2, ...).
struct FunVar {
  enum class Kind { F, G, H, Free };
  Kind kind = Kind::F;
  std::string label;  // dotted call label, empty for F and Free
  int index = 1;
  int order = -1;     // creation sequence number within one run

  /// Unique name within a run, e.g. "f1", "g2^1.1", "h1^1", "f'3".
  std::string name() const;
  friend bool operator==(const FunVar& a, const FunVar& b) {
    return a.kind == b.kind && a.label == b.label && a.index == b.index;
  }
};

struct FunNode;

/// Function expression: variables, identities at closed types, products and
/// sums of functions, and lifted constructor maps (`List f`). `Opaque` leaves
/// are arbitrary functions into a fresh rigid type and only occur in
/// candidates built by the oracle.
class FunExpr {
 public:
  enum class Kind { Var, Id, Prod, Sum, Lift, Opaque };

  static FunExpr var(FunVar v);
  static FunExpr id(Type at);
  static FunExpr prod(FunExpr left, FunExpr right);
  static FunExpr sum(FunExpr left, FunExpr right);
  static FunExpr lift(std::string ctor, std::vector<FunExpr> args);
  static FunExpr opaque(Type domain, std::string atom);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  const FunVar& var() const;
  /// Id: the type it is the identity at. Opaque: its domain.
  const Type& type() const;
  /// Lift constructor or Opaque codomain atom.
  const std::string& name() const;
  const FunExpr& left() const;
  const FunExpr& right() const;
  std::span<const FunExpr> args() const;

  friend bool operator==(const FunExpr& a, const FunExpr& b);

 private:
  explicit FunExpr(std::shared_ptr<const FunNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FunNode> node_;
};

struct FunNode {
  FunExpr::Kind kind;
  FunVar var;
  std::optional<Type> type;
  std::string name;
  std::vector<FunExpr> children;
};

FunExpr with_children(const FunExpr& e, std::vector<FunExpr> children);
bool same_head(const FunExpr& a, const FunExpr& b);
/// Variables in left-to-right occurrence order, without duplicates.
std::vector<FunVar> fun_vars(const FunExpr& e);
bool occurs(const FunVar& v, const FunExpr& e);

/// Ordered pair <lhs, rhs> emitted by one step of one call.
struct Constraint {
  FunExpr lhs;
  FunExpr rhs;
  std::string label;  // call label
  std::string step;   // "i", "v", "vi"

  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

std::string pretty(const FunExpr& e);
std::string pretty(const Constraint& c);

}  // namespace gadtmap
