#include "gadtmap/adm.hpp"

#include <algorithm>

namespace gadtmap {

std::string pretty(const Assignment& a) {
  if (a.form == Assignment::Form::Beta) return a.var + " == " + pretty(a.other);
  return pretty(a.other) + " == " + a.var;
}

FunExpr lift_type(const Type& t, const FunEnv& env) {
  if (t.is_var()) {
    auto it = env.find(t.name());
    if (it == env.end()) {
      throw InternalInvariantViolation("no function bound for type variable " + t.name());
    }
    return it->second;
  }
  if (is_closed(t)) return FunExpr::id(t);
  std::vector<FunExpr> kids;
  for (const Type& c : t.args()) kids.push_back(lift_type(c, env));
  switch (t.kind()) {
    case Type::Kind::Prod: return FunExpr::prod(kids[0], kids[1]);
    case Type::Kind::Sum: return FunExpr::sum(kids[0], kids[1]);
    case Type::Kind::App: return FunExpr::lift(t.name(), std::move(kids));
    default: throw InternalInvariantViolation("cannot lift type " + pretty(t));
  }
}

namespace {

void descend(const Type& l, const Type& r, int ell, std::vector<Assignment>& out) {
  if (r.is_var()) {
    out.push_back(Assignment{Assignment::Form::Sigma, ell, r.name(), l});
    return;
  }
  if (l.is_var()) {
    out.push_back(Assignment{Assignment::Form::Beta, ell, l.name(), r});
    return;
  }
  bool same = l.kind() == Type::Kind::Base ? r.kind() == Type::Kind::Base && l.base() == r.base()
                                           : same_head(l, r);
  if (!same) {
    throw NotTopUnifiable("cannot match " + pretty(l) + " against " + pretty(r));
  }
  for (std::size_t i = 0; i < l.args().size(); ++i) descend(l.args()[i], r.args()[i], ell, out);
}

}  // namespace

std::vector<Assignment> match_spec(const Type& sigma, const Type& k, int ell) {
  std::vector<Assignment> out;
  descend(sigma, k, ell, out);
  return out;
}

std::vector<Type> compute_taus(const std::vector<Assignment>& assignments,
                               const std::vector<std::string>& gammas) {
  std::vector<Type> taus;
  for (const std::string& g : gammas) {
    auto it = std::ranges::find_if(assignments, [&](const Assignment& a) {
      return a.form == Assignment::Form::Sigma && a.var == g;
    });
    taus.push_back(it == assignments.end() ? Type::var(g) : it->other);
  }
  return taus;
}

std::vector<Constraint> emit_step_five(const std::vector<Assignment>& assignments,
                                       const FunEnv& g_env, const FunEnv& h_env,
                                       const std::string& label) {
  std::vector<Constraint> out;
  for (const Assignment& a : assignments) {
    if (a.form != Assignment::Form::Beta) continue;
    out.push_back(Constraint{lift_type(a.other, h_env), g_env.at(a.var), label, "v"});
  }
  return out;
}

std::vector<Constraint> emit_step_six(const std::vector<Assignment>& assignments,
                                      const std::vector<std::string>& gammas, const FunEnv& g_env,
                                      const std::string& label) {
  std::vector<Constraint> out;
  for (const std::string& g : gammas) {
    const Assignment* first = nullptr;
    for (const Assignment& a : assignments) {
      if (a.form != Assignment::Form::Sigma || a.var != g) continue;
      if (!first) {
        first = &a;
        continue;
      }
      out.push_back(Constraint{lift_type(a.other, g_env), lift_type(first->other, g_env), label, "vi"});
    }
  }
  return out;
}

Type compute_rj(const Type& f, const std::vector<std::string>& alphas, const std::vector<Type>& taus) {
  TypeSubst s;
  for (std::size_t i = 0; i < alphas.size(); ++i) s.emplace(alphas[i], taus[i]);
  return substitute(f, s);
}

namespace {

class Run {
 public:
  Run(const TypedTerm& typed, const ValidatedProgram& vp) : typed_(typed), vp_(vp) {}

  FunVar fresh(FunVar::Kind kind, const std::string& label, int index) {
    return FunVar{kind, label, index, counter_++};
  }

  void call(const std::string& label, const Path& path, const std::vector<FunExpr>& funs,
            const Type& spec, bool root) {
    Spec s{spec, free_vars(spec)};
    if (root) {
      check_call_invariants(typed_, path, s, static_cast<int>(funs.size()), vp_);
    } else {
      try {
        check_call_invariants(typed_, path, s, static_cast<int>(funs.size()), vp_);
      } catch (const std::exception& e) {
        throw InternalInvariantViolation("call " + label + " breaks the call invariants: " + e.what());
      }
    }

    CallTrace tr;
    tr.label = label;
    tr.path = path;
    tr.term = subterm(typed_.term, path);
    tr.funs = funs;
    tr.spec = spec;
    tr.spec_vars = s.vars;
    result_.annotation.essential.push_back(path);

    FunEnv g_env;
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
      tr.g.push_back(fresh(FunVar::Kind::G, label, static_cast<int>(i + 1)));
      g_env.emplace(s.vars[i], FunExpr::var(tr.g.back()));
    }

    const std::size_t slot = result_.calls.size();
    result_.calls.push_back(tr);
    std::vector<Child> children;

    if (spec.kind() == Type::Kind::Prod || spec.kind() == Type::Kind::Sum) {
      components(tr, spec, g_env, children);
    } else {
      constructor(tr, spec, g_env, children);
    }
    result_.calls[slot] = std::move(tr);
    for (const Child& c : children) call(c.label, c.path, c.funs, c.spec, false);
  }

  AdmResult finish() { return std::move(result_); }

  std::vector<FunVar> make_roots(int k) {
    std::vector<FunVar> roots;
    for (int i = 1; i <= k; ++i) roots.push_back(fresh(FunVar::Kind::F, "", i));
    result_.roots = roots;
    return roots;
  }

 private:
  struct Child {
    std::string label;
    Path path;
    std::vector<FunExpr> funs;
    Type spec;
  };

  void emit(CallTrace& tr, Constraint c) {
    tr.emitted.push_back(c);
    result_.constraints.push_back(std::move(c));
  }

  static bool skip(const Type& t) { return t.is_var() || is_closed(t); }

  static std::vector<Type> children_of(const Type& t) { return {t.args().begin(), t.args().end()}; }

  static std::vector<FunExpr> lift_all(const std::vector<Type>& ts, const FunEnv& env) {
    std::vector<FunExpr> out;
    for (const Type& t : ts) out.push_back(lift_type(t, env));
    return out;
  }

  // Cases A-C: pairs against products, injections against sums.
  void components(CallTrace& tr, const Type& spec, const FunEnv& g_env, std::vector<Child>& kids) {
    const Term& t = tr.term;
    tr.kind = t.kind() == Term::Kind::Pair ? 'A' : t.kind() == Term::Kind::Inl ? 'B' : 'C';
    for (int l = 0; l < 2; ++l) {
      emit(tr, Constraint{lift_type(spec.args()[static_cast<std::size_t>(l)], g_env),
                          tr.funs[static_cast<std::size_t>(l)], tr.label, "i"});
    }
    std::vector<int> present;
    if (tr.kind == 'A') present = {0, 1};
    else present = {tr.kind == 'B' ? 0 : 1};
    for (std::size_t n = 0; n < present.size(); ++n) {
      const Type& sj = spec.args()[static_cast<std::size_t>(present[n])];
      tr.rjs.push_back(sj);
      if (skip(sj)) {
        tr.zetas.emplace_back();
        continue;
      }
      tr.zetas.push_back(children_of(sj));
      int arg = static_cast<int>(n);
      kids.push_back(Child{tr.label + "." + std::to_string(n + 1), child_path(tr.path, arg),
                           lift_all(children_of(sj), g_env), sj});
    }
  }

  // Case D: a constructor against an application of its own type.
  void constructor(CallTrace& tr, const Type& spec, const FunEnv& g_env, std::vector<Child>& kids) {
    tr.kind = 'D';
    const ConstructorSig& sig = vp_.ctor(tr.term.name());
    const std::size_t k = spec.args().size();

    for (std::size_t l = 0; l < k; ++l) {
      emit(tr, Constraint{lift_type(spec.args()[l], g_env), tr.funs[l], tr.label, "i"});
    }

    TypeSubst to_gamma;
    for (std::size_t i = 0; i < sig.type_vars.size(); ++i) {
      tr.gammas.push_back("y" + std::to_string(i + 1) + "^" + tr.label);
      to_gamma.emplace(sig.type_vars[i], Type::var(tr.gammas.back()));
    }
    for (std::size_t l = 0; l < k; ++l) {
      Type kl = substitute(sig.return_indices[l], to_gamma);
      tr.matching.emplace_back(spec.args()[l], kl);
      std::vector<Assignment> as = match_spec(spec.args()[l], kl, static_cast<int>(l + 1));
      tr.assignments.insert(tr.assignments.end(), as.begin(), as.end());
    }

    tr.taus = compute_taus(tr.assignments, tr.gammas);

    FunEnv h_env;
    for (std::size_t i = 0; i < tr.gammas.size(); ++i) {
      tr.h.push_back(fresh(FunVar::Kind::H, tr.label, static_cast<int>(i + 1)));
      h_env.emplace(tr.gammas[i], FunExpr::var(tr.h.back()));
    }

    for (Constraint& c : emit_step_five(tr.assignments, g_env, h_env, tr.label)) emit(tr, c);
    for (Constraint& c : emit_step_six(tr.assignments, tr.gammas, g_env, tr.label)) emit(tr, c);

    FunEnv both = g_env;
    both.insert(h_env.begin(), h_env.end());
    for (std::size_t j = 0; j < sig.arg_types.size(); ++j) {
      Type rj = compute_rj(sig.arg_types[j], sig.type_vars, tr.taus);
      tr.rjs.push_back(rj);
      if (skip(rj)) {
        tr.zetas.emplace_back();
        continue;
      }
      tr.zetas.push_back(children_of(rj));
      kids.push_back(Child{tr.label + "." + std::to_string(j + 1),
                           child_path(tr.path, static_cast<int>(j)), lift_all(children_of(rj), both),
                           rj});
    }
  }

  const TypedTerm& typed_;
  const ValidatedProgram& vp_;
  AdmResult result_;
  int counter_ = 0;
};

}  // namespace

AdmResult adm_run(const TypedTerm& typed, const Spec& spec, const ValidatedProgram& vp) {
  const int k = spec_arity(spec.shape, vp);
  Run run(typed, vp);
  std::vector<FunVar> roots = run.make_roots(k);
  std::vector<FunExpr> funs;
  for (const FunVar& f : roots) funs.push_back(FunExpr::var(f));
  run.call("1", {}, funs, spec.shape, true);
  AdmResult r = run.finish();
  r.annotation.term = typed.term;
  return r;
}

}  // namespace gadtmap
