#include "gadtmap/oracle.hpp"

#include <algorithm>

#include "gadtmap/adm.hpp"
#include "gadtmap/solver.hpp"

namespace gadtmap {

FunExpr normalize_ids(const FunExpr& e) {
  FunExpr x = expand_id(e);
  if (x.args().empty()) return x;
  std::vector<FunExpr> kids;
  for (const FunExpr& c : x.args()) kids.push_back(normalize_ids(c));
  return with_children(x, std::move(kids));
}

std::optional<ComponentEnv> match_fun(const Type& k, const FunExpr& phi, ComponentEnv env) {
  if (k.is_var()) {
    auto it = env.find(k.name());
    if (it == env.end()) {
      env.emplace(k.name(), phi);
    } else if (!(normalize_ids(it->second) == normalize_ids(phi))) {
      return std::nullopt;
    }
    return env;
  }
  if (is_closed(k)) {
    if (normalize_ids(phi) == normalize_ids(FunExpr::id(k))) return env;
    return std::nullopt;
  }
  FunExpr x = expand_id(phi);
  bool shape_ok = false;
  switch (k.kind()) {
    case Type::Kind::Prod: shape_ok = x.kind() == FunExpr::Kind::Prod; break;
    case Type::Kind::Sum: shape_ok = x.kind() == FunExpr::Kind::Sum; break;
    case Type::Kind::App:
      shape_ok = x.kind() == FunExpr::Kind::Lift && x.name() == k.name() &&
                 x.args().size() == k.args().size();
      break;
    default: break;
  }
  if (!shape_ok) return std::nullopt;
  for (std::size_t i = 0; i < k.args().size(); ++i) {
    auto next = match_fun(k.args()[i], x.args()[i], std::move(env));
    if (!next) return std::nullopt;
    env = std::move(*next);
  }
  return env;
}

std::optional<Term> map_apply(const FunExpr& phi, const TypedTerm& typed, const Path& path,
                              const ValidatedProgram& vp) {
  const Term& t = subterm(typed.term, path);
  auto child = [&](const FunExpr& f, int i) { return map_apply(f, typed, child_path(path, i), vp); };
  switch (phi.kind()) {
    case FunExpr::Kind::Id: return t;
    case FunExpr::Kind::Opaque: return Term::constant(phi.name());
    case FunExpr::Kind::Var: return std::nullopt;
    case FunExpr::Kind::Prod: {
      if (t.kind() != Term::Kind::Pair) return std::nullopt;
      auto l = child(phi.left(), 0);
      if (!l) return std::nullopt;
      auto r = child(phi.right(), 1);
      if (!r) return std::nullopt;
      return Term::pair(*l, *r);
    }
    case FunExpr::Kind::Sum: {
      if (t.kind() == Term::Kind::Inl) {
        auto in = child(phi.left(), 0);
        return in ? std::optional(Term::inl(*in)) : std::nullopt;
      }
      if (t.kind() == Term::Kind::Inr) {
        auto in = child(phi.right(), 0);
        return in ? std::optional(Term::inr(*in)) : std::nullopt;
      }
      return std::nullopt;
    }
    case FunExpr::Kind::Lift: {
      if (t.kind() != Term::Kind::Ctor || vp.owner_of(t.name()).name != phi.name()) return std::nullopt;
      const ConstructorSig& sig = vp.ctor(t.name());
      ComponentEnv env;
      for (std::size_t l = 0; l < sig.return_indices.size(); ++l) {
        auto next = match_fun(sig.return_indices[l], phi.args()[l], std::move(env));
        if (!next) return std::nullopt;
        env = std::move(*next);
      }
      const std::vector<Type>& w = typed.instance_of.at(path);
      for (std::size_t a = 0; a < sig.type_vars.size(); ++a) {
        env.emplace(sig.type_vars[a], FunExpr::id(w[a]));
      }
      std::vector<Term> args;
      for (std::size_t j = 0; j < sig.arg_types.size(); ++j) {
        auto u = child(lift_type(sig.arg_types[j], env), static_cast<int>(j));
        if (!u) return std::nullopt;
        args.push_back(*u);
      }
      return Term::ctor(t.name(), std::move(args));
    }
  }
  return std::nullopt;
}

namespace {

bool liftable(const Type& t, const ValidatedProgram& vp) {
  return t.kind() == Type::Kind::App && !t.args().empty() && !vp.is_proper(t.name());
}

bool branching(const Type& t, const ValidatedProgram& vp) {
  return t.kind() == Type::Kind::Prod || t.kind() == Type::Kind::Sum || liftable(t, vp);
}

std::vector<FunExpr> shapes(const Type& domain, int depth, const ValidatedProgram& vp) {
  std::vector<FunExpr> out{FunExpr::opaque(domain, ""), FunExpr::id(domain)};
  if (depth < 2 || !branching(domain, vp)) return out;
  std::vector<std::vector<FunExpr>> combos{{}};
  for (const Type& c : domain.args()) {
    std::vector<FunExpr> opts = shapes(c, depth - 1, vp);
    std::vector<std::vector<FunExpr>> next;
    for (const auto& prefix : combos) {
      for (const FunExpr& o : opts) {
        next.push_back(prefix);
        next.back().push_back(o);
      }
    }
    combos = std::move(next);
  }
  for (auto& kids : combos) {
    switch (domain.kind()) {
      case Type::Kind::Prod: out.push_back(FunExpr::prod(kids[0], kids[1])); break;
      case Type::Kind::Sum: out.push_back(FunExpr::sum(kids[0], kids[1])); break;
      default: out.push_back(FunExpr::lift(domain.name(), std::move(kids))); break;
    }
  }
  return out;
}

FunExpr number_atoms(const FunExpr& e, int& next) {
  if (e.kind() == FunExpr::Kind::Opaque) return FunExpr::opaque(e.type(), "x" + std::to_string(next++));
  if (e.args().empty()) return e;
  std::vector<FunExpr> kids;
  for (const FunExpr& c : e.args()) kids.push_back(number_atoms(c, next));
  return with_children(e, std::move(kids));
}

bool match_pattern(const FunExpr& pat, const FunExpr& cand, std::map<std::string, FunExpr>& binds) {
  if (pat.is_var()) {
    auto [it, fresh] = binds.emplace(pat.var().name(), cand);
    return fresh || it->second == cand;
  }
  if (pat.kind() == FunExpr::Kind::Id || pat.kind() == FunExpr::Kind::Opaque) return pat == cand;
  if (!same_head(pat, cand)) return false;
  for (std::size_t i = 0; i < pat.args().size(); ++i) {
    if (!match_pattern(pat.args()[i], cand.args()[i], binds)) return false;
  }
  return true;
}

std::string render(const std::vector<FunExpr>& tuple) {
  std::string s;
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? ", " : "") + pretty(tuple[i]);
  return s;
}

}  // namespace

std::vector<FunExpr> enumerate_candidates(const Type& domain, int depth, const ValidatedProgram& vp) {
  std::vector<FunExpr> out;
  for (const FunExpr& e : shapes(domain, depth, vp)) {
    int n = 0;
    out.push_back(number_atoms(e, n));
  }
  return out;
}

std::uint64_t count_candidates(const Type& domain, int depth, const ValidatedProgram& vp) {
  if (depth < 2 || !branching(domain, vp)) return 2;
  std::uint64_t product = 1;
  for (const Type& c : domain.args()) product *= count_candidates(c, depth - 1, vp);
  return 2 + product;
}

bool is_instance(const std::vector<FunExpr>& form, const std::vector<FunExpr>& candidate) {
  if (form.size() != candidate.size()) return false;
  std::map<std::string, FunExpr> binds;
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (!match_pattern(normalize_ids(form[i]), normalize_ids(candidate[i]), binds)) return false;
  }
  return true;
}

VerifyReport verify(const TypedTerm& typed, const Spec& spec, const std::vector<FunExpr>& form,
                    int depth, const ValidatedProgram& vp, const InferOptions& opts) {
  VerifyReport rep;
  rep.depth = depth;
  const Type& root_type = typed.type_at({});
  const int k = spec_arity(spec.shape, vp);
  const std::vector<Type> domains(root_type.args().begin(), root_type.args().end());

  std::vector<std::vector<FunExpr>> tuples{{}};
  for (const Type& d : domains) {
    std::vector<FunExpr> opts_d = enumerate_candidates(d, depth, vp);
    std::vector<std::vector<FunExpr>> next;
    for (const auto& prefix : tuples) {
      for (const FunExpr& o : opts_d) {
        next.push_back(prefix);
        next.back().push_back(o);
      }
    }
    tuples = std::move(next);
  }

  for (std::vector<FunExpr>& tuple : tuples) {
    // Opaque atoms must be distinct across the whole tuple.
    int n = 0;
    for (FunExpr& f : tuple) f = number_atoms(f, n);

    FunExpr whole = spec.shape.kind() == Type::Kind::Prod ? FunExpr::prod(tuple[0], tuple[1])
                    : spec.shape.kind() == Type::Kind::Sum ? FunExpr::sum(tuple[0], tuple[1])
                                                           : FunExpr::lift(spec.shape.name(), tuple);
    bool ok = false;
    if (auto mapped = map_apply(whole, typed, {}, vp)) {
      try {
        TypedTerm again = infer(*mapped, vp, opts);
        check_call_invariants(again, {}, spec, k, vp);
        ok = true;
      } catch (const TypeError&) {
      } catch (const SpecMismatch&) {
      }
    }
    bool inst = is_instance(form, tuple);
    ++rep.candidates;
    if (ok) {
      ++rep.mappable;
      std::vector<FunExpr> norm;
      for (const FunExpr& f : tuple) norm.push_back(normalize_ids(f));
      if (std::ranges::find(rep.survivors, norm) == rep.survivors.end()) rep.survivors.push_back(norm);
    }
    if (inst) ++rep.instances;
    if (ok != inst) {
      rep.disagreements.push_back(render(tuple) + (ok ? " is mappable but not an instance"
                                                      : " is an instance but not mappable"));
    }
  }
  return rep;
}

}  // namespace gadtmap
