#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>

#include "gadtmap/syntax.hpp"
#include "lexer.hpp"

namespace gadtmap {

using detail::Tok;
using detail::Token;

namespace {

bool is_upper(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

/// How bare type identifiers are resolved.
struct TypeScope {
  const std::vector<std::string>* binders = nullptr;  // declaration mode
  const Program* program = nullptr;                  // resolve against declarations
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(detail::tokenize(text)) {}

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }

  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.col);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }

  Token expect(Tok k, std::string_view what = {}) {
    if (!at(k)) {
      std::string want = what.empty() ? std::string(detail::describe(k)) : std::string(what);
      fail("expected " + want + ", found " + found());
    }
    return next();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "', found " + found());
    next();
  }

  void expect_end() {
    if (!at(Tok::End)) fail("unexpected " + found());
  }

  std::string found() const {
    if (at(Tok::End)) return "end of input";
    return "'" + peek().text + "'";
  }

  // ---- types ----

  Type type(const TypeScope& sc) {
    Type t = type_sum(sc);
    if (at(Tok::Arrow)) fail("arrow types are not allowed here");
    return t;
  }

  Type type_sum(const TypeScope& sc) {
    Type l = type_prod(sc);
    if (at(Tok::Plus)) {
      next();
      return Type::sum(l, type_sum(sc));
    }
    return l;
  }

  Type type_prod(const TypeScope& sc) {
    Type l = type_app(sc);
    if (at(Tok::Star)) {
      next();
      return Type::prod(l, type_prod(sc));
    }
    return l;
  }

  bool starts_type_atom() const {
    if (at(Tok::LParen)) return true;
    if (!at(Tok::Ident)) return false;
    // The next constructor signature or declaration begins here.
    if (peek(1).kind == Tok::Colon) return false;
    return peek().text != "data";
  }

  Type type_app(const TypeScope& sc) {
    if (!at(Tok::Ident)) return type_atom(sc);
    Token head = next();
    std::optional<Type> leaf = resolve_leaf(head, sc);
    if (leaf) return *leaf;
    std::vector<Type> args;
    while (starts_type_atom()) args.push_back(type_atom(sc));
    return make_app(head, std::move(args), sc);
  }

  Type type_atom(const TypeScope& sc) {
    if (at(Tok::LParen)) {
      next();
      Type t = type_sum(sc);
      if (at(Tok::Arrow)) fail("arrow types are not allowed");
      expect(Tok::RParen);
      return t;
    }
    Token head = expect(Tok::Ident, "a type");
    std::optional<Type> leaf = resolve_leaf(head, sc);
    if (leaf) return *leaf;
    return make_app(head, {}, sc);
  }

  /// Variables and base types; nullopt means `head` names a type constructor.
  std::optional<Type> resolve_leaf(const Token& head, const TypeScope& sc) {
    const std::string& n = head.text;
    if (sc.binders) {
      if (std::ranges::find(*sc.binders, n) != sc.binders->end()) return Type::var(n);
    }
    if (auto b = base_from_name(n)) return Type::base(*b);
    if (sc.binders) return std::nullopt;
    if (sc.program) {
      bool declared = std::ranges::any_of(*sc.program, [&](const GadtDecl& d) { return d.name == n; });
      if (declared) return std::nullopt;
      if (peek().kind == Tok::Ident || peek().kind == Tok::LParen) {
        if (is_upper(n)) fail("unknown type constructor '" + n + "'", head);
      }
      return Type::var(n);
    }
    if (is_upper(n)) return std::nullopt;
    return Type::var(n);
  }

  Type make_app(const Token& head, std::vector<Type> args, const TypeScope& sc) {
    if (sc.program && !sc.binders) {
      auto it = std::ranges::find_if(*sc.program, [&](const GadtDecl& d) { return d.name == head.text; });
      if (it != sc.program->end() && static_cast<int>(args.size()) != it->arity) {
        fail("type constructor '" + head.text + "' expects " + std::to_string(it->arity) +
                 " arguments, got " + std::to_string(args.size()),
             head);
      }
    }
    return Type::app(head.text, std::move(args));
  }

  // ---- declarations ----

  Program program() {
    Program out;
    while (!at(Tok::End)) {
      GadtDecl d = decl();
      if (std::ranges::any_of(out, [&](const GadtDecl& e) { return e.name == d.name; })) {
        throw ParseError("duplicate declaration of '" + d.name + "'", d.line, 1);
      }
      out.push_back(std::move(d));
    }
    return out;
  }

  GadtDecl decl() {
    GadtDecl d;
    d.line = peek().line;
    expect_word("data");
    Token name = expect(Tok::Ident, "a type name");
    if (base_from_name(name.text)) fail("cannot redeclare base type '" + name.text + "'", name);
    d.name = name.text;
    expect(Tok::Colon);
    expect_word("Set");
    while (at(Tok::Arrow)) {
      next();
      expect_word("Set");
      ++d.arity;
    }
    expect_word("where");
    while (!at(Tok::End) && !at_word("data")) d.constructors.push_back(constructor(d));
    return d;
  }

  ConstructorSig constructor(const GadtDecl& owner) {
    ConstructorSig c;
    Token name = expect(Tok::Ident, "a constructor name");
    c.name = name.text;
    c.line = name.line;
    expect(Tok::Colon);
    if (at_word("forall")) {
      next();
      while (at(Tok::Ident)) {
        Token v = next();
        if (std::ranges::find(c.type_vars, v.text) != c.type_vars.end()) {
          fail("duplicate type variable '" + v.text + "'", v);
        }
        if (base_from_name(v.text)) fail("base type '" + v.text + "' cannot be bound", v);
        c.type_vars.push_back(v.text);
      }
      expect(Tok::Dot);
    }
    TypeScope sc{&c.type_vars, nullptr};
    std::vector<Type> chain{type_sum(sc)};
    Token last = peek();
    while (at(Tok::Arrow)) {
      next();
      last = peek();
      chain.push_back(type_sum(sc));
    }
    Type ret = chain.back();
    chain.pop_back();
    if (ret.kind() != Type::Kind::App || ret.name() != owner.name ||
        static_cast<int>(ret.args().size()) != owner.arity) {
      fail("constructor '" + c.name + "' must return " + owner.name + " applied to " +
               std::to_string(owner.arity) + " indices",
           last);
    }
    c.arg_types = std::move(chain);
    c.return_indices.assign(ret.args().begin(), ret.args().end());
    if (at(Tok::Semi)) next();
    return c;
  }

  // ---- terms ----

  Term term(const std::map<std::string, int>& ctors) {
    if (at_word("inl") || at_word("inr")) {
      bool left = peek().text == "inl";
      Token kw = next();
      if (!starts_term_atom()) fail("'" + kw.text + "' expects one argument", kw);
      Term inner = term_atom(ctors);
      return left ? Term::inl(inner) : Term::inr(inner);
    }
    if (at(Tok::Ident)) {
      auto it = ctors.find(peek().text);
      if (it != ctors.end()) {
        Token head = next();
        std::vector<Term> args;
        while (starts_term_atom()) args.push_back(term_atom(ctors));
        if (static_cast<int>(args.size()) != it->second) {
          fail("constructor '" + head.text + "' expects " + std::to_string(it->second) +
                   " arguments, got " + std::to_string(args.size()),
               head);
        }
        return Term::ctor(head.text, std::move(args));
      }
    }
    return term_atom(ctors);
  }

  bool starts_term_atom() const {
    return at(Tok::Ident) || at(Tok::Number) || at(Tok::LParen) || at(Tok::Hash);
  }

  Term term_atom(const std::map<std::string, int>& ctors) {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return Term::lit(t.text, t.text[0] == '-' ? std::optional(BaseType::Int) : std::nullopt);
      case Tok::Hash: {
        next();
        Token a = expect(Tok::Ident, "an atom name");
        return Term::constant(a.text);
      }
      case Tok::Ident: {
        next();
        if (t.text == "tt" || t.text == "true" || t.text == "false") {
          return Term::lit(t.text, BaseType::Bool);
        }
        if (t.text == "inl" || t.text == "inr") fail("'" + t.text + "' expects one argument", t);
        auto it = ctors.find(t.text);
        if (it == ctors.end()) fail("unknown constructor '" + t.text + "'", t);
        if (it->second != 0) {
          fail("constructor '" + t.text + "' expects " + std::to_string(it->second) +
                   " arguments, got 0",
               t);
        }
        return Term::ctor(t.text, {});
      }
      case Tok::LParen: {
        next();
        if (at(Tok::RParen)) {
          next();
          return Term::lit("()", BaseType::Unit);
        }
        Term first = term(ctors);
        if (at(Tok::Colon)) {
          next();
          Type ann = type(TypeScope{nullptr, program_});
          expect(Tok::RParen);
          return first.annotated(ann);
        }
        std::vector<Term> items{first};
        while (at(Tok::Comma)) {
          next();
          items.push_back(term(ctors));
        }
        expect(Tok::RParen);
        Term out = items.back();
        for (std::size_t i = items.size() - 1; i-- > 0;) out = Term::pair(items[i], out);
        return out;
      }
      default:
        fail("expected a term, found " + found());
    }
  }

  // ---- function expressions ----

  FunExpr fun_sum() {
    FunExpr l = fun_prod();
    if (at(Tok::Plus)) {
      next();
      return FunExpr::sum(l, fun_sum());
    }
    return l;
  }

  FunExpr fun_prod() {
    FunExpr l = fun_app();
    if (at(Tok::Star)) {
      next();
      return FunExpr::prod(l, fun_prod());
    }
    return l;
  }

  bool starts_fun_atom() const { return at(Tok::Ident) || at(Tok::LParen) || at(Tok::Hash); }

  FunExpr fun_app() {
    if (at(Tok::Ident) && !fun_var_name(peek().text) && peek().text != "id") {
      Token head = next();
      std::vector<FunExpr> args;
      while (starts_fun_atom()) args.push_back(fun_atom());
      return FunExpr::lift(head.text, std::move(args));
    }
    return fun_atom();
  }

  FunExpr fun_atom() {
    const Token t = peek();
    if (at(Tok::LParen)) {
      next();
      FunExpr e = fun_sum();
      expect(Tok::RParen);
      return e;
    }
    if (at(Tok::Hash)) {
      next();
      Token a = expect(Tok::Ident, "an atom name");
      expect(Tok::At);
      return FunExpr::opaque(type_atom(TypeScope{}), a.text);
    }
    expect(Tok::Ident, "a function expression");
    if (auto v = fun_var_name(t.text)) return FunExpr::var(*v);
    if (t.text == "id") {
      expect(Tok::At);
      return FunExpr::id(type_atom(TypeScope{}));
    }
    return FunExpr::lift(t.text, {});
  }

  static std::optional<FunVar> fun_var_name(const std::string& s) {
    static const std::regex labelled(R"(([gh])([0-9]+)\^([0-9]+(\.[0-9]+)*))");
    static const std::regex root(R"(f([0-9]+))");
    static const std::regex free(R"(f'([0-9]+))");
    std::smatch m;
    FunVar v;
    if (std::regex_match(s, m, labelled)) {
      v.kind = m[1] == "g" ? FunVar::Kind::G : FunVar::Kind::H;
      v.index = std::stoi(m[2]);
      v.label = m[3];
      return v;
    }
    if (std::regex_match(s, m, root)) {
      v.kind = FunVar::Kind::F;
      v.index = std::stoi(m[1]);
      return v;
    }
    if (std::regex_match(s, m, free)) {
      v.kind = FunVar::Kind::Free;
      v.index = std::stoi(m[1]);
      return v;
    }
    return std::nullopt;
  }

  const Program* program_ = nullptr;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::map<std::string, int> ctor_arities(const Program& p) {
  std::map<std::string, int> out;
  for (const GadtDecl& d : p) {
    for (const ConstructorSig& c : d.constructors) out[c.name] = static_cast<int>(c.arg_types.size());
  }
  return out;
}

}  // namespace

Program parse_program(std::string_view text) {
  Parser p(text);
  return p.program();
}

Term parse_term(std::string_view text, const Program& program) {
  Parser p(text);
  p.program_ = &program;
  Term t = p.term(ctor_arities(program));
  p.expect_end();
  return t;
}

Type parse_type(std::string_view text, const Program* program) {
  Parser p(text);
  Type t = p.type(TypeScope{nullptr, program});
  p.expect_end();
  return t;
}

Spec parse_spec(std::string_view text, const Program& program) {
  Type shape = parse_type(text, &program);
  return Spec{shape, free_vars(shape)};
}

FunExpr parse_fun_expr(std::string_view text) {
  Parser p(text);
  FunExpr e = p.fun_sum();
  p.expect_end();
  return e;
}

Constraint parse_constraint(std::string_view text) {
  Parser p(text);
  p.expect(Tok::Lt);
  FunExpr l = p.fun_sum();
  p.expect(Tok::Comma);
  FunExpr r = p.fun_sum();
  p.expect(Tok::Gt);
  p.expect_end();
  return Constraint{l, r, "", ""};
}

}  // namespace gadtmap
