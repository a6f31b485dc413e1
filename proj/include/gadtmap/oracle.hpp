#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gadtmap/funexpr.hpp"
#include "gadtmap/syntax.hpp"
#include "gadtmap/typecheck.hpp"
#include "gadtmap/wellformed.hpp"

namespace gadtmap {

/// Component functions recovered for a constructor's type variables.
using ComponentEnv = std::map<std::string, FunExpr>;

/// Expand identities at composite types all the way down.
FunExpr normalize_ids(const FunExpr& e);

/// Decompose `phi` along the return index `k`; nullopt when impossible.
std::optional<ComponentEnv> match_fun(const Type& k, const FunExpr& phi, ComponentEnv env);

/// Push `phi` through the subterm at `path`. Opaque leaves produce constants
/// of their atom type. Returns nullopt when `phi` cannot be decomposed along
/// the term's constructors.
std::optional<Term> map_apply(const FunExpr& phi, const TypedTerm& typed, const Path& path,
                              const ValidatedProgram& vp);

/// Candidates over `domain` with structural depth at most `depth`. Lift
/// nodes are only built for non-proper constructors of arity >= 1. Opaque
/// leaves are numbered x0, x1, ... in left-to-right order per candidate.
std::vector<FunExpr> enumerate_candidates(const Type& domain, int depth, const ValidatedProgram& vp);

/// Size of enumerate_candidates, computed by the counting recurrence alone.
std::uint64_t count_candidates(const Type& domain, int depth, const ValidatedProgram& vp);

/// One-sided match of `form` against `candidate` after Id normalization;
/// only variables of `form` are bound.
bool is_instance(const std::vector<FunExpr>& form, const std::vector<FunExpr>& candidate);

struct VerifyReport {
  int depth = 0;
  std::size_t candidates = 0;
  std::size_t mappable = 0;
  std::size_t instances = 0;
  std::vector<std::string> disagreements;  // rendered candidate tuples
  /// Mappable candidates, deduplicated after Id normalization.
  std::vector<std::vector<FunExpr>> survivors;

  bool agrees() const { return disagreements.empty(); }
};

/// Enumerate candidate tuples for the root functions and compare mappability
/// against instance-of-`form` for each.
VerifyReport verify(const TypedTerm& typed, const Spec& spec, const std::vector<FunExpr>& form,
                    int depth, const ValidatedProgram& vp, const InferOptions& opts = {});

}  // namespace gadtmap
