#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gadtmap/funexpr.hpp"
#include "gadtmap/type.hpp"

namespace gadtmap {

/// c : forall a1 .. am. F1 -> ... -> Fn -> G K1 ... Kk
struct ConstructorSig {
  std::string name;
  std::vector<std::string> type_vars;
  std::vector<Type> arg_types;
  std::vector<Type> return_indices;
  int line = 0;
};

struct GadtDecl {
  std::string name;
  int arity = 0;
  std::vector<ConstructorSig> constructors;
  int line = 0;
};

using Program = std::vector<GadtDecl>;

struct TermNode;

/// A closed data term. `Const` is an opaque value of a rigid atom type; such
/// values are only produced when the oracle maps an opaque function.
class Term {
 public:
  enum class Kind { Ctor, Pair, Inl, Inr, Lit, Const };

  /// The unit literal `()`.
  Term();
  static Term ctor(std::string name, std::vector<Term> args);
  static Term pair(Term left, Term right);
  static Term inl(Term inner);
  static Term inr(Term inner);
  static Term lit(std::string token, std::optional<BaseType> hint);
  static Term constant(std::string atom);

  Kind kind() const;
  /// Constructor name, literal token or atom name.
  const std::string& name() const;
  std::optional<BaseType> base_hint() const;
  const std::optional<Type>& annotation() const;
  std::span<const Term> args() const;
  const Term& arg(std::size_t i) const { return args()[i]; }

  Term annotated(Type t) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

struct TermNode {
  Term::Kind kind;
  std::string name;
  std::optional<BaseType> hint;
  std::optional<Type> annotation;
  std::vector<Term> children;
};

/// Position of a subterm: child indices from the root (0-based).
using Path = std::vector<int>;

const Term& subterm(const Term& t, const Path& p);
Path child_path(const Path& p, int i);

/// Specification shape plus its variables in first-occurrence order.
struct Spec {
  Type shape;
  std::vector<std::string> vars;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col);
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Parse `data` declarations. Type expressions inside are left unresolved;
/// `validate` checks constructor names and arities.
Program parse_program(std::string_view text);
Term parse_term(std::string_view text, const Program& program);
Spec parse_spec(std::string_view text, const Program& program);
/// Parse a type; constructor names are checked against `program` when given.
Type parse_type(std::string_view text, const Program* program = nullptr);
FunExpr parse_fun_expr(std::string_view text);
Constraint parse_constraint(std::string_view text);

std::string pretty(const Term& t);
/// Render a term marking the head former of every essential position with `*`.
std::string pretty_annotated(const Term& t, const std::vector<Path>& essential);
std::string pretty(const ConstructorSig& c, const GadtDecl& owner);
std::string pretty(const GadtDecl& d);

}  // namespace gadtmap
