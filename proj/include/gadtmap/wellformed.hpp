#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gadtmap/syntax.hpp"

namespace gadtmap {

enum class DiagKind {
  KMentionsSelf,
  KMentionsProperGadt,
  UnknownTypeConstructor,
  TypeArityMismatch,
  UnboundTypeVariable,
  DuplicateConstructor,
};

std::string_view to_string(DiagKind k);

struct Diagnostic {
  DiagKind kind;
  std::string gadt;
  std::string ctor;
  int index = 0;        // 1-based argument or return-index position, 0 if n/a
  std::string detail;   // offending constructor name etc.
  int line = 0;
  std::string message;
};

class ValidatedProgram {
 public:
  ValidatedProgram() = default;
  explicit ValidatedProgram(Program decls);

  const Program& decls() const { return decls_; }
  const GadtDecl* find_decl(std::string_view name) const;
  const GadtDecl& decl(std::string_view name) const;
  bool has_ctor(std::string_view name) const;
  const ConstructorSig& ctor(std::string_view name) const;
  const GadtDecl& owner_of(std::string_view ctor) const;
  bool is_proper(std::string_view gadt) const;
  const std::map<std::string, bool, std::less<>>& proper_flags() const { return proper_; }

 private:
  Program decls_;
  std::map<std::string, bool, std::less<>> proper_;
  std::map<std::string, std::pair<std::size_t, std::size_t>, std::less<>> ctor_index_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

/// Constructor whose return indices are not exactly its own variable tuple.
bool is_restricted(const ConstructorSig& sig, int arity);

/// All class-membership violations, in declaration order.
std::vector<Diagnostic> check_program(const Program& program);

/// Throws ValidationError when check_program reports anything.
ValidatedProgram validate(const Program& program);

}  // namespace gadtmap
