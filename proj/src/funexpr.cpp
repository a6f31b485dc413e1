#include "gadtmap/funexpr.hpp"

#include <algorithm>
#include <cassert>

namespace gadtmap {

std::string FunVar::name() const {
  switch (kind) {
    case Kind::F: return "f" + std::to_string(index);
    case Kind::Free: return "f'" + std::to_string(index);
    case Kind::G: return "g" + std::to_string(index) + "^" + label;
    case Kind::H: return "h" + std::to_string(index) + "^" + label;
  }
  return "?";
}

FunExpr FunExpr::var(FunVar v) {
  return FunExpr(std::make_shared<const FunNode>(FunNode{Kind::Var, std::move(v), {}, {}, {}}));
}

FunExpr FunExpr::id(Type at) {
  return FunExpr(std::make_shared<const FunNode>(FunNode{Kind::Id, {}, std::move(at), {}, {}}));
}

FunExpr FunExpr::prod(FunExpr left, FunExpr right) {
  return FunExpr(std::make_shared<const FunNode>(
      FunNode{Kind::Prod, {}, {}, {}, {std::move(left), std::move(right)}}));
}

FunExpr FunExpr::sum(FunExpr left, FunExpr right) {
  return FunExpr(std::make_shared<const FunNode>(
      FunNode{Kind::Sum, {}, {}, {}, {std::move(left), std::move(right)}}));
}

FunExpr FunExpr::lift(std::string ctor, std::vector<FunExpr> args) {
  return FunExpr(std::make_shared<const FunNode>(
      FunNode{Kind::Lift, {}, {}, std::move(ctor), std::move(args)}));
}

FunExpr FunExpr::opaque(Type domain, std::string atom) {
  return FunExpr(std::make_shared<const FunNode>(
      FunNode{Kind::Opaque, {}, std::move(domain), std::move(atom), {}}));
}

FunExpr::Kind FunExpr::kind() const { return node_->kind; }
const FunVar& FunExpr::var() const { return node_->var; }

const Type& FunExpr::type() const {
  assert(node_->type);
  return *node_->type;
}

const std::string& FunExpr::name() const { return node_->name; }
const FunExpr& FunExpr::left() const { return node_->children.at(0); }
const FunExpr& FunExpr::right() const { return node_->children.at(1); }
std::span<const FunExpr> FunExpr::args() const { return node_->children; }

bool operator==(const FunExpr& a, const FunExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FunExpr::Kind::Var: return a.var() == b.var();
    case FunExpr::Kind::Id: return a.type() == b.type();
    case FunExpr::Kind::Opaque: return a.name() == b.name() && a.type() == b.type();
    case FunExpr::Kind::Lift:
      if (a.name() != b.name()) return false;
      [[fallthrough]];
    case FunExpr::Kind::Prod:
    case FunExpr::Kind::Sum:
      return std::ranges::equal(a.args(), b.args());
  }
  return false;
}

FunExpr with_children(const FunExpr& e, std::vector<FunExpr> children) {
  switch (e.kind()) {
    case FunExpr::Kind::Prod: return FunExpr::prod(std::move(children[0]), std::move(children[1]));
    case FunExpr::Kind::Sum: return FunExpr::sum(std::move(children[0]), std::move(children[1]));
    case FunExpr::Kind::Lift: return FunExpr::lift(e.name(), std::move(children));
    default: return e;
  }
}

bool same_head(const FunExpr& a, const FunExpr& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FunExpr::Kind::Prod:
    case FunExpr::Kind::Sum: return true;
    case FunExpr::Kind::Lift: return a.name() == b.name() && a.args().size() == b.args().size();
    default: return false;
  }
}

namespace {

void collect(const FunExpr& e, std::vector<FunVar>& out) {
  if (e.is_var()) {
    if (std::ranges::find(out, e.var()) == out.end()) out.push_back(e.var());
    return;
  }
  for (const FunExpr& c : e.args()) collect(c, out);
}

}  // namespace

std::vector<FunVar> fun_vars(const FunExpr& e) {
  std::vector<FunVar> out;
  collect(e, out);
  return out;
}

bool occurs(const FunVar& v, const FunExpr& e) {
  if (e.is_var()) return e.var() == v;
  return std::ranges::any_of(e.args(), [&](const FunExpr& c) { return occurs(v, c); });
}

}  // namespace gadtmap
