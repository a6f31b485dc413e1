#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gadtmap/funexpr.hpp"
#include "gadtmap/syntax.hpp"
#include "gadtmap/typecheck.hpp"
#include "gadtmap/wellformed.hpp"

namespace gadtmap {

using FunEnv = std::map<std::string, FunExpr>;

/// Raised when a recursive call breaks the call invariants; indicates a bug.
class InternalInvariantViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

/// A matching problem whose two sides disagree at a non-variable position.
class NotTopUnifiable : public SpecMismatch {
  using SpecMismatch::SpecMismatch;
};

/// One solution component of a matching problem Sigma_l == K_l[alpha := gamma].
struct Assignment {
  enum class Form { Beta, Sigma };
  Form form;
  int ell = 1;        // matching problem index, 1-based
  std::string var;    // Beta: the spec variable; Sigma: the gamma variable
  Type other;         // Beta: psi over gammas; Sigma: sigma over spec variables
};

std::string pretty(const Assignment& a);

struct CallTrace {
  char kind = 'D';  // 'A' pair, 'B' inl, 'C' inr, 'D' constructor
  std::string label;
  Path path;
  Term term;
  std::vector<FunExpr> funs;
  Type spec;
  std::vector<std::string> spec_vars;
  std::vector<FunVar> g;
  std::vector<std::pair<Type, Type>> matching;
  std::vector<std::string> gammas;
  std::vector<Assignment> assignments;
  std::vector<Type> taus;
  std::vector<FunVar> h;
  /// Case D: R_j per constructor argument. Cases A-C: the component specs.
  std::vector<Type> rjs;
  /// Arguments of each R_j that was recursed into, empty when skipped.
  std::vector<std::vector<Type>> zetas;
  std::vector<Constraint> emitted;
};

struct AnnotatedTerm {
  Term term;
  std::vector<Path> essential;  // in call order
};

struct AdmResult {
  std::vector<Constraint> constraints;
  std::vector<CallTrace> calls;
  AnnotatedTerm annotation;
  std::vector<FunVar> roots;
};

/// Variables map through `env`, closed types to identities, and every other
/// former homomorphically.
FunExpr lift_type(const Type& t, const FunEnv& env);

/// Solve Sigma == K by simultaneous descent. Throws NotTopUnifiable.
std::vector<Assignment> match_spec(const Type& sigma, const Type& k, int ell);

/// tau for each gamma: its first sigma assignment, or the gamma itself.
std::vector<Type> compute_taus(const std::vector<Assignment>& assignments,
                               const std::vector<std::string>& gammas);

std::vector<Constraint> emit_step_five(const std::vector<Assignment>& assignments,
                                       const FunEnv& g_env, const FunEnv& h_env,
                                       const std::string& label);

std::vector<Constraint> emit_step_six(const std::vector<Assignment>& assignments,
                                      const std::vector<std::string>& gammas, const FunEnv& g_env,
                                      const std::string& label);

Type compute_rj(const Type& f, const std::vector<std::string>& alphas, const std::vector<Type>& taus);

/// Run the algorithm from the root of `typed`. The root call's invariants
/// are checked first; failures there surface as SpecMismatch.
AdmResult adm_run(const TypedTerm& typed, const Spec& spec, const ValidatedProgram& vp);

}  // namespace gadtmap
