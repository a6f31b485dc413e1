#include <algorithm>
#include <cassert>

#include "gadtmap/syntax.hpp"

namespace gadtmap {

Term::Term() : node_(lit("()", BaseType::Unit).node_) {}

Term Term::ctor(std::string name, std::vector<Term> args) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::Ctor, std::move(name), {}, {}, std::move(args)}));
}

Term Term::pair(Term left, Term right) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::Pair, {}, {}, {}, {std::move(left), std::move(right)}}));
}

Term Term::inl(Term inner) {
  return Term(std::make_shared<const TermNode>(TermNode{Kind::Inl, {}, {}, {}, {std::move(inner)}}));
}

Term Term::inr(Term inner) {
  return Term(std::make_shared<const TermNode>(TermNode{Kind::Inr, {}, {}, {}, {std::move(inner)}}));
}

Term Term::lit(std::string token, std::optional<BaseType> hint) {
  return Term(std::make_shared<const TermNode>(TermNode{Kind::Lit, std::move(token), hint, {}, {}}));
}

Term Term::constant(std::string atom) {
  return Term(std::make_shared<const TermNode>(TermNode{Kind::Const, std::move(atom), {}, {}, {}}));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
std::optional<BaseType> Term::base_hint() const { return node_->hint; }
const std::optional<Type>& Term::annotation() const { return node_->annotation; }
std::span<const Term> Term::args() const { return node_->children; }

Term Term::annotated(Type t) const {
  TermNode n = *node_;
  n.annotation = std::move(t);
  return Term(std::make_shared<const TermNode>(std::move(n)));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.base_hint() == b.base_hint() &&
         a.annotation() == b.annotation() && std::ranges::equal(a.args(), b.args());
}

const Term& subterm(const Term& t, const Path& p) {
  const Term* cur = &t;
  for (int i : p) {
    assert(i >= 0 && static_cast<std::size_t>(i) < cur->args().size());
    cur = &cur->arg(static_cast<std::size_t>(i));
  }
  return *cur;
}

Path child_path(const Path& p, int i) {
  Path out = p;
  out.push_back(i);
  return out;
}

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error(msg), line_(line), col_(col) {}

}  // namespace gadtmap
