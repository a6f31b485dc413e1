#include "gadtmap/typecheck.hpp"

#include <algorithm>

namespace gadtmap {

MetaStore::MetaStore(int preexisting)
    : solution_(static_cast<std::size_t>(preexisting)),
      numeric_(static_cast<std::size_t>(preexisting), false) {}

Type MetaStore::fresh(bool numeric) {
  solution_.emplace_back();
  numeric_.push_back(numeric);
  return Type::meta(static_cast<int>(solution_.size()) - 1);
}

Type MetaStore::walk(const Type& t) const {
  Type cur = t;
  while (cur.is_meta()) {
    const auto& s = solution_[static_cast<std::size_t>(cur.meta_id())];
    if (!s) break;
    cur = *s;
  }
  return cur;
}

Type MetaStore::zonk(const Type& t) const {
  Type w = walk(t);
  if (w.args().empty()) return w;
  std::vector<Type> kids;
  kids.reserve(w.args().size());
  for (const Type& c : w.args()) kids.push_back(zonk(c));
  return with_children(w, std::move(kids));
}

bool MetaStore::occurs(int id, const Type& t) const {
  Type w = walk(t);
  if (w.is_meta()) return w.meta_id() == id;
  return std::ranges::any_of(w.args(), [&](const Type& c) { return occurs(id, c); });
}

bool MetaStore::unify(const Type& a, const Type& b) {
  Type x = walk(a);
  Type y = walk(b);
  if (x.is_meta() && y.is_meta() && x.meta_id() == y.meta_id()) return true;
  if (x.is_meta()) {
    if (occurs(x.meta_id(), y)) return false;
    bind(x.meta_id(), y);
    return true;
  }
  if (y.is_meta()) return unify(y, x);
  if (x.is_var() || y.is_var()) return x.is_var() && y.is_var() && x.name() == y.name();
  if (x.kind() == Type::Kind::Base) return y.kind() == Type::Kind::Base && x.base() == y.base();
  if (!same_head(x, y)) return false;
  for (std::size_t i = 0; i < x.args().size(); ++i) {
    if (!unify(x.args()[i], y.args()[i])) return false;
  }
  return true;
}

namespace {

struct Inferencer {
  const ValidatedProgram& vp;
  InferOptions opts;
  MetaStore store;
  std::map<Path, Type> raw;
  std::map<Path, std::vector<Type>> inst;

  [[noreturn]] void mismatch(const Path& p, const Term& t, const Type& expected, const Type& found) {
    throw TypeError("type mismatch at '" + pretty(t) + "': expected " + pretty(store.zonk(expected)) +
                        ", found " + pretty(store.zonk(found)),
                    p);
  }

  void unify_at(const Path& p, const Term& t, const Type& expected, const Type& found) {
    if (!store.unify(expected, found)) mismatch(p, t, expected, found);
  }

  Type go(const Term& t, Path& path) {
    Type ty = node(t, path);
    if (t.annotation()) unify_at(path, t, *t.annotation(), ty);
    raw.emplace(path, ty);
    return ty;
  }

  Type child(const Term& t, std::size_t i, Path& path) {
    path.push_back(static_cast<int>(i));
    Type ty = go(t.arg(i), path);
    path.pop_back();
    return ty;
  }

  Type node(const Term& t, Path& path) {
    switch (t.kind()) {
      case Term::Kind::Ctor: {
        if (!vp.has_ctor(t.name())) throw TypeError("unknown constructor '" + t.name() + "'", path);
        const ConstructorSig& sig = vp.ctor(t.name());
        const GadtDecl& owner = vp.owner_of(t.name());
        if (sig.arg_types.size() != t.args().size()) {
          throw TypeError("constructor '" + t.name() + "' expects " +
                              std::to_string(sig.arg_types.size()) + " arguments",
                          path);
        }
        TypeSubst s;
        std::vector<Type> w;
        for (const std::string& a : sig.type_vars) {
          w.push_back(store.fresh());
          s.emplace(a, w.back());
        }
        for (std::size_t j = 0; j < sig.arg_types.size(); ++j) {
          Type expected = substitute(sig.arg_types[j], s);
          Type found = child(t, j, path);
          path.push_back(static_cast<int>(j));
          unify_at(path, t.arg(j), expected, found);
          path.pop_back();
        }
        std::vector<Type> idx;
        for (const Type& k : sig.return_indices) idx.push_back(substitute(k, s));
        inst.emplace(path, std::move(w));
        return Type::app(owner.name, std::move(idx));
      }
      case Term::Kind::Pair: {
        Type l = child(t, 0, path);
        Type r = child(t, 1, path);
        return Type::prod(l, r);
      }
      case Term::Kind::Inl: return Type::sum(child(t, 0, path), store.fresh());
      case Term::Kind::Inr: {
        Type l = store.fresh();
        return Type::sum(l, child(t, 0, path));
      }
      case Term::Kind::Lit:
        if (t.base_hint()) return Type::base(*t.base_hint());
        return store.fresh(true);
      case Term::Kind::Const: return Type::var(t.name());
    }
    return store.fresh();
  }

  void default_literals() {
    const BaseType dflt = opts.int_literals ? BaseType::Int : BaseType::Nat;
    for (int id = 0; id < store.size(); ++id) {
      if (!store.numeric(id)) continue;
      Type w = store.walk(Type::meta(id));
      if (w.is_meta()) {
        store.bind(w.meta_id(), Type::base(dflt));
        continue;
      }
      if (w.kind() != Type::Kind::Base || (w.base() != BaseType::Nat && w.base() != BaseType::Int)) {
        for (const auto& [p, ty] : raw) {
          if (ty.is_meta() && ty.meta_id() == id) {
            throw TypeError("numeric literal used at type " + pretty(store.zonk(w)), p);
          }
        }
        throw TypeError("numeric literal used at type " + pretty(store.zonk(w)), {});
      }
    }
  }
};

}  // namespace

TypedTerm infer(const Term& t, const ValidatedProgram& vp, const InferOptions& opts) {
  Inferencer inf{vp, opts, MetaStore{}, {}, {}};
  Path root;
  inf.go(t, root);
  inf.default_literals();
  TypedTerm out;
  out.term = t;
  for (const auto& [p, ty] : inf.raw) out.type_of.emplace(p, inf.store.zonk(ty));
  for (const auto& [p, w] : inf.inst) {
    std::vector<Type> z;
    for (const Type& ty : w) z.push_back(inf.store.zonk(ty));
    out.instance_of.emplace(p, std::move(z));
  }
  out.meta_count = inf.store.size();
  return out;
}

int spec_arity(const Type& spec, const ValidatedProgram& vp) {
  switch (spec.kind()) {
    case Type::Kind::Prod:
    case Type::Kind::Sum: return 2;
    case Type::Kind::App: {
      const GadtDecl* d = vp.find_decl(spec.name());
      if (!d) throw SpecMismatch("unknown type constructor '" + spec.name() + "' in specification");
      return d->arity;
    }
    default:
      throw SpecMismatch("specification '" + pretty(spec) + "' has no type former at its head");
  }
}

InstanceWitness check_call_invariants(const TypedTerm& typed, const Path& path, const Spec& spec,
                                      int fun_arity, const ValidatedProgram& vp) {
  const int k = spec_arity(spec.shape, vp);
  if (fun_arity != k) {
    throw FunArityMismatch("specification '" + pretty(spec.shape) + "' needs " + std::to_string(k) +
                           " input functions, got " + std::to_string(fun_arity));
  }
  const Term& t = subterm(typed.term, path);
  const Type& ty = typed.type_at(path);
  bool head_ok = false;
  switch (spec.shape.kind()) {
    case Type::Kind::Prod: head_ok = t.kind() == Term::Kind::Pair; break;
    case Type::Kind::Sum:
      head_ok = t.kind() == Term::Kind::Inl || t.kind() == Term::Kind::Inr;
      break;
    case Type::Kind::App:
      head_ok = t.kind() == Term::Kind::Ctor && vp.owner_of(t.name()).name == spec.shape.name();
      break;
    default: break;
  }
  if (!head_ok) {
    throw SpecMismatch("term '" + pretty(t) + "' does not have the head former of '" +
                       pretty(spec.shape) + "'");
  }

  MetaStore store(typed.meta_count);
  TypeSubst rename;
  for (const std::string& v : spec.vars) rename.emplace(v, store.fresh());
  Type pattern = substitute(spec.shape, rename);
  if (!store.unify(pattern, ty)) {
    throw SpecMismatch("term '" + pretty(t) + "' of type " + pretty(ty) +
                       " is not an instance of '" + pretty(spec.shape) + "'");
  }
  InstanceWitness out;
  for (const auto& [v, m] : rename) out.subst.emplace(v, store.zonk(m));
  if (auto it = typed.instance_of.find(path); it != typed.instance_of.end()) {
    for (const Type& w : it->second) out.w.push_back(store.zonk(w));
  }
  return out;
}

}  // namespace gadtmap
