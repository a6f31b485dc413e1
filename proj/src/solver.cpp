#include "gadtmap/solver.hpp"

#include <algorithm>

namespace gadtmap {

FunExpr expand_id(const FunExpr& e) {
  if (e.kind() != FunExpr::Kind::Id) return e;
  const Type& t = e.type();
  std::vector<FunExpr> kids;
  for (const Type& c : t.args()) kids.push_back(FunExpr::id(c));
  switch (t.kind()) {
    case Type::Kind::Prod: return FunExpr::prod(kids[0], kids[1]);
    case Type::Kind::Sum: return FunExpr::sum(kids[0], kids[1]);
    case Type::Kind::App: return FunExpr::lift(t.name(), std::move(kids));
    default: return e;
  }
}

namespace {

bool expandable(const FunExpr& e) {
  return e.kind() == FunExpr::Kind::Id && expand_id(e).kind() != FunExpr::Kind::Id;
}

[[noreturn]] void clash(const FunExpr& a, const FunExpr& b) {
  throw Unsatisfiable("cannot equate " + pretty(a) + " with " + pretty(b));
}

/// Shared head-peeling step for two non-variable expressions. Returns the
/// pairs of children to equate next.
std::vector<std::pair<FunExpr, FunExpr>> peel(const FunExpr& a, const FunExpr& b) {
  if (a == b) return {};
  if (a.kind() == FunExpr::Kind::Id || b.kind() == FunExpr::Kind::Id) {
    FunExpr x = expandable(a) ? expand_id(a) : a;
    FunExpr y = expandable(b) ? expand_id(b) : b;
    if (x.kind() == FunExpr::Kind::Id || y.kind() == FunExpr::Kind::Id) {
      if (x == y) return {};
      clash(a, b);
    }
    return peel(x, y);
  }
  if (!same_head(a, b)) clash(a, b);
  std::vector<std::pair<FunExpr, FunExpr>> out;
  for (std::size_t i = 0; i < a.args().size(); ++i) out.emplace_back(a.args()[i], b.args()[i]);
  return out;
}

void decompose_into(const FunExpr& a, const FunExpr& b, std::vector<AtomicConstraint>& out) {
  if (b.is_var()) {
    out.push_back(AtomicConstraint{a, b.var()});
    return;
  }
  if (a.is_var()) {
    out.push_back(AtomicConstraint{b, a.var()});
    return;
  }
  for (const auto& [x, y] : peel(a, b)) decompose_into(x, y, out);
}

class Unifier {
 public:
  FunExpr walk(const FunExpr& e) const {
    FunExpr cur = e;
    while (cur.is_var()) {
      auto it = bound_.find(cur.var().name());
      if (it == bound_.end()) break;
      cur = it->second;
    }
    return cur;
  }

  FunExpr resolve(const FunExpr& e) const {
    FunExpr w = walk(e);
    if (w.args().empty()) return w;
    std::vector<FunExpr> kids;
    for (const FunExpr& c : w.args()) kids.push_back(resolve(c));
    return with_children(w, std::move(kids));
  }

  void note(const FunExpr& e) {
    if (e.is_var()) {
      seen_.emplace(e.var().name(), e.var());
      return;
    }
    for (const FunExpr& c : e.args()) note(c);
  }

  void unify(const FunExpr& a0, const FunExpr& b0) {
    FunExpr a = walk(a0);
    FunExpr b = walk(b0);
    if (a.is_var() && b.is_var()) {
      if (a.var() == b.var()) return;
      if (a.var().order < b.var().order) bind(a.var(), b);
      else bind(b.var(), a);
      return;
    }
    if (a.is_var()) return bind_checked(a.var(), b);
    if (b.is_var()) return bind_checked(b.var(), a);
    for (const auto& [x, y] : peel(a, b)) unify(x, y);
  }

  SolvedSystem result() const {
    std::vector<FunVar> vars;
    for (const auto& [name, v] : seen_) vars.push_back(v);
    std::ranges::sort(vars, [](const FunVar& x, const FunVar& y) {
      if (x.order != y.order) return x.order < y.order;
      return x.name() < y.name();
    });
    SolvedSystem s;
    for (const FunVar& v : vars) {
      if (bound_.contains(v.name())) s.bindings.emplace_back(v, resolve(FunExpr::var(v)));
      else s.free.push_back(v);
    }
    return s;
  }

 private:
  bool occurs_in(const FunVar& v, const FunExpr& e) const {
    FunExpr w = walk(e);
    if (w.is_var()) return w.var() == v;
    return std::ranges::any_of(w.args(), [&](const FunExpr& c) { return occurs_in(v, c); });
  }

  void bind_checked(const FunVar& v, const FunExpr& e) {
    if (occurs_in(v, e)) {
      throw Unsatisfiable("occurs check: " + v.name() + " occurs in " + pretty(resolve(e)));
    }
    bind(v, e);
  }

  void bind(const FunVar& v, const FunExpr& e) { bound_.emplace(v.name(), e); }

  std::map<std::string, FunExpr> bound_;
  std::map<std::string, FunVar> seen_;
};

}  // namespace

std::vector<AtomicConstraint> decompose(const Constraint& c) {
  std::vector<AtomicConstraint> out;
  decompose_into(c.lhs, c.rhs, out);
  return out;
}

const FunExpr* SolvedSystem::find(const FunVar& v) const {
  auto it = std::ranges::find_if(bindings, [&](const auto& b) { return b.first == v; });
  return it == bindings.end() ? nullptr : &it->second;
}

FunExpr SolvedSystem::apply(const FunExpr& e) const {
  if (e.is_var()) {
    const FunExpr* b = find(e.var());
    return b ? *b : e;
  }
  if (e.args().empty()) return e;
  std::vector<FunExpr> kids;
  for (const FunExpr& c : e.args()) kids.push_back(apply(c));
  return with_children(e, std::move(kids));
}

SolvedSystem unify_all(const std::vector<Constraint>& constraints) {
  Unifier u;
  for (const Constraint& c : constraints) {
    u.note(c.lhs);
    u.note(c.rhs);
  }
  for (const Constraint& c : constraints) {
    for (const AtomicConstraint& a : decompose(c)) u.unify(a.lhs, FunExpr::var(a.rhs));
  }
  return u.result();
}

namespace {

FunExpr rename(const FunExpr& e, std::map<std::string, FunVar>& names) {
  if (e.is_var()) {
    auto [it, fresh] = names.emplace(e.var().name(), FunVar{});
    if (fresh) {
      int n = static_cast<int>(names.size());
      it->second = FunVar{FunVar::Kind::Free, "", n, n};
    }
    return FunExpr::var(it->second);
  }
  if (e.args().empty()) return e;
  std::vector<FunExpr> kids;
  for (const FunExpr& c : e.args()) kids.push_back(rename(c, names));
  return with_children(e, std::move(kids));
}

}  // namespace

std::vector<FunExpr> canonical_rename(const std::vector<FunExpr>& es, int* count) {
  std::map<std::string, FunVar> names;
  std::vector<FunExpr> out;
  for (const FunExpr& e : es) out.push_back(rename(e, names));
  if (count) *count = static_cast<int>(names.size());
  return out;
}

GeneralForm most_general_form(const SolvedSystem& s, const std::vector<FunVar>& roots) {
  std::vector<FunExpr> raw;
  for (const FunVar& f : roots) raw.push_back(s.apply(FunExpr::var(f)));
  GeneralForm g;
  g.form = canonical_rename(raw, &g.free_count);
  return g;
}

}  // namespace gadtmap
