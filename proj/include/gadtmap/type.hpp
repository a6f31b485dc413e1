#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gadtmap {

enum class BaseType { Nat, Int, Bool, Unit };

std::string_view to_string(BaseType b);
std::optional<BaseType> base_from_name(std::string_view name);

struct TypeNode;

/// Immutable type expression: variables, base types, binary products and
/// sums, and applications of declared data type constructors. `Meta` nodes
/// only appear in inferred term types (unsolved unification variables).
class Type {
 public:
  enum class Kind { Var, Base, Prod, Sum, App, Meta };

  /// Unit.
  Type();
  static Type var(std::string name);
  static Type base(BaseType b);
  static Type prod(Type left, Type right);
  static Type sum(Type left, Type right);
  static Type app(std::string ctor, std::vector<Type> args);
  static Type meta(int id);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_meta() const { return kind() == Kind::Meta; }

  /// Variable name or constructor name.
  const std::string& name() const;
  BaseType base() const;
  int meta_id() const;
  const Type& left() const;
  const Type& right() const;
  /// Children: constructor arguments, or the two operands of a product/sum.
  std::span<const Type> args() const;

  friend bool operator==(const Type& a, const Type& b);

 private:
  explicit Type(std::shared_ptr<const TypeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TypeNode> node_;
};

struct TypeNode {
  Type::Kind kind;
  std::string name;
  BaseType base = BaseType::Unit;
  int meta = -1;
  std::vector<Type> children;
};

using TypeSubst = std::map<std::string, Type>;

/// Free type variables in first-occurrence (left-to-right preorder) order.
std::vector<std::string> free_vars(const Type& t);
bool is_closed(const Type& t);
bool mentions_ctor(const Type& t, std::string_view ctor);
Type substitute(const Type& t, const TypeSubst& s);

/// Rebuild `t` with new children, keeping its head.
Type with_children(const Type& t, std::vector<Type> children);
/// True when both are non-variable nodes with the same head symbol
/// (same kind, same constructor name and arity, same base type).
bool same_head(const Type& a, const Type& b);

std::string pretty(const Type& t);

}  // namespace gadtmap
