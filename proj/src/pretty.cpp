#include <algorithm>

#include "gadtmap/syntax.hpp"

namespace gadtmap {

namespace {

bool binary(const Type& t) { return t.kind() == Type::Kind::Prod || t.kind() == Type::Kind::Sum; }

bool composite(const Type& t) {
  return binary(t) || (t.kind() == Type::Kind::App && !t.args().empty());
}

std::string paren(const std::string& s, bool wrap) { return wrap ? "(" + s + ")" : s; }

std::string type_atom(const Type& t) { return paren(pretty(t), composite(t)); }

bool binary(const FunExpr& e) {
  return e.kind() == FunExpr::Kind::Prod || e.kind() == FunExpr::Kind::Sum;
}

void print_term(const Term& t, const std::vector<Path>* essential, Path& path, std::string& out,
                bool as_arg);

void print_core(const Term& t, const std::vector<Path>* essential, Path& path, std::string& out) {
  if (essential && std::ranges::find(*essential, path) != essential->end()) out += '*';
  auto child = [&](std::size_t i, bool as_arg) {
    path.push_back(static_cast<int>(i));
    print_term(t.arg(i), essential, path, out, as_arg);
    path.pop_back();
  };
  switch (t.kind()) {
    case Term::Kind::Ctor:
      out += t.name();
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        out += ' ';
        child(i, true);
      }
      break;
    case Term::Kind::Pair:
      out += '(';
      child(0, false);
      out += ", ";
      child(1, false);
      out += ')';
      break;
    case Term::Kind::Inl:
    case Term::Kind::Inr:
      out += t.kind() == Term::Kind::Inl ? "inl " : "inr ";
      child(0, true);
      break;
    case Term::Kind::Lit: out += t.name(); break;
    case Term::Kind::Const: out += "#" + t.name(); break;
  }
}

void print_term(const Term& t, const std::vector<Path>* essential, Path& path, std::string& out,
                bool as_arg) {
  if (t.annotation()) {
    out += '(';
    print_core(t, essential, path, out);
    out += " : " + pretty(*t.annotation()) + ")";
    return;
  }
  bool wrap = as_arg && ((t.kind() == Term::Kind::Ctor && !t.args().empty()) ||
                         t.kind() == Term::Kind::Inl || t.kind() == Term::Kind::Inr);
  if (wrap) out += '(';
  print_core(t, essential, path, out);
  if (wrap) out += ')';
}

}  // namespace

std::string pretty(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Var: return t.name();
    case Type::Kind::Base: return std::string(to_string(t.base()));
    case Type::Kind::Meta: return "m" + std::to_string(t.meta_id());
    case Type::Kind::Prod:
      return paren(pretty(t.left()), binary(t.left())) + " * " +
             paren(pretty(t.right()), binary(t.right()));
    case Type::Kind::Sum:
      return paren(pretty(t.left()), binary(t.left())) + " + " +
             paren(pretty(t.right()), binary(t.right()));
    case Type::Kind::App: {
      std::string s = t.name();
      for (const Type& a : t.args()) s += " " + type_atom(a);
      return s;
    }
  }
  return "?";
}

std::string pretty(const FunExpr& e) {
  switch (e.kind()) {
    case FunExpr::Kind::Var: return e.var().name();
    case FunExpr::Kind::Id: return "id@" + type_atom(e.type());
    case FunExpr::Kind::Opaque: return "#" + e.name() + "@" + type_atom(e.type());
    case FunExpr::Kind::Prod:
      return paren(pretty(e.left()), binary(e.left())) + " * " +
             paren(pretty(e.right()), binary(e.right()));
    case FunExpr::Kind::Sum:
      return paren(pretty(e.left()), binary(e.left())) + " + " +
             paren(pretty(e.right()), binary(e.right()));
    case FunExpr::Kind::Lift: {
      std::string s = e.name();
      for (const FunExpr& a : e.args()) {
        bool bare = a.is_var() || (a.kind() == FunExpr::Kind::Lift && a.args().empty());
        s += " " + paren(pretty(a), !bare);
      }
      return s;
    }
  }
  return "?";
}

std::string pretty(const Constraint& c) { return "<" + pretty(c.lhs) + ", " + pretty(c.rhs) + ">"; }

std::string pretty(const Term& t) {
  std::string out;
  Path path;
  print_term(t, nullptr, path, out, false);
  return out;
}

std::string pretty_annotated(const Term& t, const std::vector<Path>& essential) {
  std::string out;
  Path path;
  print_term(t, &essential, path, out, false);
  return out;
}

std::string pretty(const ConstructorSig& c, const GadtDecl& owner) {
  std::string s = c.name + " : ";
  if (!c.type_vars.empty()) {
    s += "forall";
    for (const std::string& v : c.type_vars) s += " " + v;
    s += ". ";
  }
  for (const Type& f : c.arg_types) s += pretty(f) + " -> ";
  s += pretty(Type::app(owner.name, c.return_indices));
  return s;
}

std::string pretty(const GadtDecl& d) {
  std::string s = "data " + d.name + " : Set";
  for (int i = 0; i < d.arity; ++i) s += " -> Set";
  s += " where\n";
  for (const ConstructorSig& c : d.constructors) s += "  " + pretty(c, d) + "\n";
  return s;
}

}  // namespace gadtmap
