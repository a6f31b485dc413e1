#include "gadtmap/report.hpp"

#include <json.hpp>
#include <sstream>

namespace gadtmap {

using json = nlohmann::ordered_json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Mappable: return "Mappable";
    case Status::SpecMismatch: return "SpecMismatch";
    case Status::IllTyped: return "IllTyped";
    case Status::Unsatisfiable: return "Unsatisfiable";
  }
  return "?";
}

int AnalysisReport::exit_code() const {
  if (status != Status::Mappable) return 1;
  if (verify && !verify->agrees()) return 3;
  return 0;
}

AnalysisReport analyze(const ValidatedProgram& vp, std::string_view term_text,
                       std::string_view spec_text, const AnalyzeOptions& opts) {
  Term term = parse_term(term_text, vp.decls());
  return analyze(vp, term, parse_spec(spec_text, vp.decls()), opts);
}

AnalysisReport analyze(const ValidatedProgram& vp, const Term& term, const Spec& spec,
                       const AnalyzeOptions& opts) {
  AnalysisReport r;
  r.term = term;
  r.spec = spec;

  TypedTerm typed;
  try {
    typed = infer(r.term, vp, InferOptions{opts.int_literals});
  } catch (const TypeError& e) {
    r.status = Status::IllTyped;
    r.detail = e.what();
    return r;
  }
  try {
    r.adm = adm_run(typed, r.spec, vp);
  } catch (const SpecMismatch& e) {
    r.status = Status::SpecMismatch;
    r.detail = e.what();
    return r;
  } catch (const FunArityMismatch& e) {
    r.status = Status::SpecMismatch;
    r.detail = e.what();
    return r;
  }
  try {
    r.solved = unify_all(r.adm.constraints);
  } catch (const Unsatisfiable& e) {
    r.status = Status::Unsatisfiable;
    r.detail = e.what();
    return r;
  }
  r.form = most_general_form(r.solved, r.adm.roots);
  if (opts.verify_depth) {
    r.verify = verify(typed, r.spec, r.form.form, *opts.verify_depth, vp,
                      InferOptions{opts.int_literals});
  }
  return r;
}

namespace {

json fun_json(const FunExpr& e) {
  switch (e.kind()) {
    case FunExpr::Kind::Var: return json{{"var", e.var().name()}};
    case FunExpr::Kind::Id: return json{{"id", pretty(e.type())}};
    case FunExpr::Kind::Opaque:
      return json{{"opaque", json{{"atom", e.name()}, {"domain", pretty(e.type())}}}};
    case FunExpr::Kind::Prod: return json{{"prod", json::array({fun_json(e.left()), fun_json(e.right())})}};
    case FunExpr::Kind::Sum: return json{{"sum", json::array({fun_json(e.left()), fun_json(e.right())})}};
    case FunExpr::Kind::Lift: {
      json args = json::array();
      for (const FunExpr& a : e.args()) args.push_back(fun_json(a));
      return json{{"lift", json{{"ctor", e.name()}, {"args", std::move(args)}}}};
    }
  }
  return nullptr;
}

std::string origin(const Constraint& c) { return c.label + ":" + c.step; }

template <class T, class F>
std::string join(const std::vector<T>& xs, const std::string& sep, F f) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + f(xs[i]);
  return s;
}

std::string render_type(const Type& t) { return pretty(t); }

std::string matching_text(const std::pair<Type, Type>& m) {
  return pretty(m.first) + " == " + pretty(m.second);
}

std::string zeta_text(const std::vector<Type>& z) {
  return z.empty() ? std::string("-") : "(" + join(z, ", ", render_type) + ")";
}

std::string form_text(const AnalysisReport& r) {
  return join(r.form.form, ", ", [](const FunExpr& e) { return pretty(e); });
}

}  // namespace

std::string render_json(const AnalysisReport& r) {
  json out;
  out["status"] = std::string(to_string(r.status));
  if (r.status != Status::Mappable) out["detail"] = r.detail;
  json form = json::array();
  json free = json::array();
  if (r.status == Status::Mappable) {
    for (const FunExpr& e : r.form.form) form.push_back(fun_json(e));
    for (int i = 1; i <= r.form.free_count; ++i) free.push_back("f'" + std::to_string(i));
  }
  out["form"] = std::move(form);
  out["freeVars"] = std::move(free);

  json cs = json::array();
  for (const Constraint& c : r.adm.constraints) {
    cs.push_back(json{{"lhs", fun_json(c.lhs)}, {"rhs", fun_json(c.rhs)}, {"origin", origin(c)}});
  }
  out["constraints"] = std::move(cs);

  json calls = json::array();
  for (const CallTrace& t : r.adm.calls) {
    json funs = json::array();
    for (const FunExpr& f : t.funs) funs.push_back(fun_json(f));
    json matching = json::array();
    for (const auto& m : t.matching) matching.push_back(matching_text(m));
    json taus = json::array();
    for (const Type& x : t.taus) taus.push_back(pretty(x));
    json rjs = json::array();
    for (const Type& x : t.rjs) rjs.push_back(pretty(x));
    json zetas = json::array();
    for (const auto& z : t.zetas) {
      json row = json::array();
      for (const Type& x : z) row.push_back(pretty(x));
      zetas.push_back(std::move(row));
    }
    json emitted = json::array();
    for (const Constraint& c : t.emitted) emitted.push_back(pretty(c));
    calls.push_back(json{{"label", t.label},
                         {"term", pretty(t.term)},
                         {"funs", std::move(funs)},
                         {"spec", pretty(t.spec)},
                         {"matching", std::move(matching)},
                         {"taus", std::move(taus)},
                         {"rjs", std::move(rjs)},
                         {"zetas", std::move(zetas)},
                         {"emitted", std::move(emitted)}});
  }
  out["calls"] = std::move(calls);

  json paths = json::array();
  for (const Path& p : r.adm.annotation.essential) paths.push_back(p);
  out["annotation"] = json{{"term", pretty_annotated(r.term, r.adm.annotation.essential)},
                           {"essentialPaths", std::move(paths)}};

  if (r.verify) {
    const VerifyReport& v = *r.verify;
    json survivors = json::array();
    for (const auto& s : v.survivors) {
      survivors.push_back(join(s, ", ", [](const FunExpr& e) { return pretty(e); }));
    }
    out["verify"] = json{{"depth", v.depth},
                         {"candidates", v.candidates},
                         {"mappable", v.mappable},
                         {"instances", v.instances},
                         {"agrees", v.agrees()},
                         {"disagreements", v.disagreements},
                         {"survivors", std::move(survivors)}};
  }
  return out.dump(2) + "\n";
}

std::string render_text(const AnalysisReport& r, const RenderOptions& opts) {
  std::ostringstream os;
  os << "status: " << to_string(r.status) << "\n";
  if (r.status != Status::Mappable) os << "detail: " << r.detail << "\n";
  if (r.status == Status::Mappable) {
    os << "form: " << form_text(r) << "\n";
    os << "free variables: " << r.form.free_count << "\n";
  }
  if (!r.adm.calls.empty()) {
    os << "calls: " << r.adm.calls.size() << ", constraints: " << r.adm.constraints.size() << "\n";
  }
  if (opts.trace && !r.adm.calls.empty()) {
    os << "\nlabel | term | funs | spec | matching | taus | R | zeta | constraints\n";
    for (const CallTrace& t : r.adm.calls) {
      os << t.label << " | " << pretty(t.term) << " | "
         << join(t.funs, ", ", [](const FunExpr& e) { return pretty(e); }) << " | "
         << pretty(t.spec) << " | " << (t.matching.empty() ? "-" : join(t.matching, "; ", matching_text))
         << " | " << (t.taus.empty() ? "-" : join(t.taus, ", ", render_type)) << " | "
         << (t.rjs.empty() ? "-" : join(t.rjs, ", ", render_type)) << " | "
         << (t.zetas.empty() ? "-" : join(t.zetas, ", ", zeta_text)) << " | "
         << (t.emitted.empty() ? "-"
                               : join(t.emitted, ", ", [](const Constraint& c) { return pretty(c); }))
         << "\n";
    }
    os << "\nconstraints:\n";
    for (const Constraint& c : r.adm.constraints) os << "  [" << origin(c) << "] " << pretty(c) << "\n";
  }
  if (opts.annotate && !r.adm.calls.empty()) {
    os << "essential: " << pretty_annotated(r.term, r.adm.annotation.essential) << "\n";
  }
  if (r.verify) {
    const VerifyReport& v = *r.verify;
    os << "verify depth=" << v.depth << ": " << v.candidates << " candidates, " << v.mappable
       << " mappable, " << v.instances << " instances of the form, "
       << (v.agrees() ? "agreement" : "DISAGREEMENT") << "\n";
    for (const std::string& d : v.disagreements) os << "  " << d << "\n";
  }
  return os.str();
}

std::string render_validation_text(const Program& p, const std::vector<Diagnostic>& diags) {
  std::ostringstream os;
  if (diags.empty()) {
    ValidatedProgram vp(p);
    for (const GadtDecl& d : p) {
      os << d.name << " (arity " << d.arity << "): " << (vp.is_proper(d.name) ? "proper GADT" : "not proper")
         << "\n";
    }
    os << "valid\n";
    return os.str();
  }
  for (const Diagnostic& d : diags) {
    os << "line " << d.line << ": " << to_string(d.kind) << ": " << d.message << "\n";
  }
  os << "invalid: " << diags.size() << " error" << (diags.size() == 1 ? "" : "s") << "\n";
  return os.str();
}

std::string render_validation_json(const Program& p, const std::vector<Diagnostic>& diags) {
  ValidatedProgram vp(p);
  json decls = json::array();
  json flags = json::object();
  for (const GadtDecl& d : p) {
    json ctors = json::array();
    for (const ConstructorSig& c : d.constructors) ctors.push_back(pretty(c, d));
    decls.push_back(json{{"name", d.name}, {"arity", d.arity}, {"constructors", std::move(ctors)}});
    flags[d.name] = vp.is_proper(d.name);
  }
  json errors = json::array();
  for (const Diagnostic& d : diags) {
    errors.push_back(json{{"kind", std::string(to_string(d.kind))},
                          {"gadt", d.gadt},
                          {"ctor", d.ctor},
                          {"index", d.index},
                          {"line", d.line},
                          {"message", d.message}});
  }
  json out{{"valid", diags.empty()},
           {"decls", std::move(decls)},
           {"properFlags", std::move(flags)},
           {"errors", std::move(errors)}};
  return out.dump(2) + "\n";
}

}  // namespace gadtmap
