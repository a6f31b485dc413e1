#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gadtmap/syntax.hpp"
#include "gadtmap/type.hpp"
#include "gadtmap/wellformed.hpp"

namespace gadtmap {

/// Unification variables with an occurs check. Metas created for numeric
/// literals are flagged so that they can be defaulted after inference.
class MetaStore {
 public:
  explicit MetaStore(int preexisting = 0);

  Type fresh(bool numeric = false);
  int size() const { return static_cast<int>(solution_.size()); }
  bool numeric(int id) const { return numeric_[static_cast<std::size_t>(id)]; }

  /// Follow solved metas at the head only.
  Type walk(const Type& t) const;
  /// Fully substitute solved metas.
  Type zonk(const Type& t) const;
  /// Returns false on clash or occurs failure; the store is then unspecified.
  bool unify(const Type& a, const Type& b);
  void bind(int id, Type t) { solution_[static_cast<std::size_t>(id)] = std::move(t); }

 private:
  bool occurs(int id, const Type& t) const;
  std::vector<std::optional<Type>> solution_;
  std::vector<bool> numeric_;
};

struct InferOptions {
  bool int_literals = false;
};

struct TypedTerm {
  Term term;
  std::map<Path, Type> type_of;
  /// For every Ctor occurrence, the types instantiating its variable tuple.
  std::map<Path, std::vector<Type>> instance_of;
  int meta_count = 0;

  const Type& type_at(const Path& p) const { return type_of.at(p); }
};

class TypeError : public std::runtime_error {
 public:
  TypeError(const std::string& msg, Path path) : std::runtime_error(msg), path_(std::move(path)) {}
  const Path& path() const { return path_; }

 private:
  Path path_;
};

class SpecMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FunArityMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

TypedTerm infer(const Term& t, const ValidatedProgram& vp, const InferOptions& opts = {});

struct InstanceWitness {
  TypeSubst subst;          // spec variable -> type
  std::vector<Type> w;      // constructor instantiation, empty for pairs/injections
};

/// Number of input functions a call on `spec` takes: 2 for products and
/// sums, the constructor's arity for applications. Throws SpecMismatch when
/// the spec has no type former at its head.
int spec_arity(const Type& spec, const ValidatedProgram& vp);

/// Check that the subterm at `path` has exactly the type spec[vars := s]
/// for some s, and that `fun_arity` matches the spec head.
InstanceWitness check_call_invariants(const TypedTerm& typed, const Path& path, const Spec& spec,
                                      int fun_arity, const ValidatedProgram& vp);

}  // namespace gadtmap
