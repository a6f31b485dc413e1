#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gadtmap/funexpr.hpp"

namespace gadtmap {

/// The constraint set has no solution (head clash or occurs failure).
class Unsatisfiable : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A decomposed constraint: `rhs` is always a variable.
struct AtomicConstraint {
  FunExpr lhs;
  FunVar rhs;
};

/// Id at a composite closed type, expanded one level (id@(A * B) becomes
/// id@A * id@B). Returns the input unchanged at base types and atoms.
FunExpr expand_id(const FunExpr& e);

/// Peel identical head formers until one side is a variable.
std::vector<AtomicConstraint> decompose(const Constraint& c);

struct SolvedSystem {
  /// Idempotent bindings, in variable creation order.
  std::vector<std::pair<FunVar, FunExpr>> bindings;
  /// Variables left unbound, in creation order.
  std::vector<FunVar> free;

  const FunExpr* find(const FunVar& v) const;
  /// Apply the bindings to an expression.
  FunExpr apply(const FunExpr& e) const;
};

/// First-order unification over function expressions. Two variables are
/// resolved by binding the earlier-created one to the later one.
SolvedSystem unify_all(const std::vector<Constraint>& constraints);

struct GeneralForm {
  std::vector<FunExpr> form;  // one per root, free variables renamed f'1, f'2, ...
  int free_count = 0;
};

GeneralForm most_general_form(const SolvedSystem& s, const std::vector<FunVar>& roots);

/// Rename variables to f'1, f'2, ... in left-to-right order of occurrence.
std::vector<FunExpr> canonical_rename(const std::vector<FunExpr>& es, int* count = nullptr);

}  // namespace gadtmap
