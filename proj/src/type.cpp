#include "gadtmap/type.hpp"

#include <algorithm>
#include <cassert>

namespace gadtmap {

std::string_view to_string(BaseType b) {
  switch (b) {
    case BaseType::Nat: return "Nat";
    case BaseType::Int: return "Int";
    case BaseType::Bool: return "Bool";
    case BaseType::Unit: return "Unit";
  }
  return "?";
}

std::optional<BaseType> base_from_name(std::string_view name) {
  if (name == "Nat") return BaseType::Nat;
  if (name == "Int") return BaseType::Int;
  if (name == "Bool") return BaseType::Bool;
  if (name == "Unit") return BaseType::Unit;
  return std::nullopt;
}

Type::Type() : node_(base(BaseType::Unit).node_) {}

Type Type::var(std::string name) {
  return Type(std::make_shared<const TypeNode>(TypeNode{Kind::Var, std::move(name), {}, -1, {}}));
}

Type Type::base(BaseType b) {
  return Type(std::make_shared<const TypeNode>(TypeNode{Kind::Base, {}, b, -1, {}}));
}

Type Type::prod(Type left, Type right) {
  return Type(std::make_shared<const TypeNode>(
      TypeNode{Kind::Prod, {}, {}, -1, {std::move(left), std::move(right)}}));
}

Type Type::sum(Type left, Type right) {
  return Type(std::make_shared<const TypeNode>(
      TypeNode{Kind::Sum, {}, {}, -1, {std::move(left), std::move(right)}}));
}

Type Type::app(std::string ctor, std::vector<Type> args) {
  return Type(std::make_shared<const TypeNode>(
      TypeNode{Kind::App, std::move(ctor), {}, -1, std::move(args)}));
}

Type Type::meta(int id) {
  return Type(std::make_shared<const TypeNode>(TypeNode{Kind::Meta, {}, {}, id, {}}));
}

Type::Kind Type::kind() const { return node_->kind; }
const std::string& Type::name() const { return node_->name; }
BaseType Type::base() const { return node_->base; }
int Type::meta_id() const { return node_->meta; }

const Type& Type::left() const {
  assert(node_->children.size() == 2);
  return node_->children[0];
}

const Type& Type::right() const {
  assert(node_->children.size() == 2);
  return node_->children[1];
}

std::span<const Type> Type::args() const { return node_->children; }

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Type::Kind::Var: return a.name() == b.name();
    case Type::Kind::Base: return a.base() == b.base();
    case Type::Kind::Meta: return a.meta_id() == b.meta_id();
    case Type::Kind::App:
      if (a.name() != b.name()) return false;
      [[fallthrough]];
    case Type::Kind::Prod:
    case Type::Kind::Sum:
      return std::ranges::equal(a.args(), b.args());
  }
  return false;
}

namespace {

void collect_vars(const Type& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::ranges::find(out, t.name()) == out.end()) out.push_back(t.name());
    return;
  }
  for (const Type& c : t.args()) collect_vars(c, out);
}

}  // namespace

std::vector<std::string> free_vars(const Type& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

bool is_closed(const Type& t) {
  if (t.is_var()) return false;
  return std::ranges::all_of(t.args(), [](const Type& c) { return is_closed(c); });
}

bool mentions_ctor(const Type& t, std::string_view ctor) {
  if (t.kind() == Type::Kind::App && t.name() == ctor) return true;
  return std::ranges::any_of(t.args(), [&](const Type& c) { return mentions_ctor(c, ctor); });
}

Type with_children(const Type& t, std::vector<Type> children) {
  switch (t.kind()) {
    case Type::Kind::Prod: return Type::prod(std::move(children[0]), std::move(children[1]));
    case Type::Kind::Sum: return Type::sum(std::move(children[0]), std::move(children[1]));
    case Type::Kind::App: return Type::app(t.name(), std::move(children));
    default: return t;
  }
}

Type substitute(const Type& t, const TypeSubst& s) {
  if (t.is_var()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Type> kids;
  kids.reserve(t.args().size());
  for (const Type& c : t.args()) kids.push_back(substitute(c, s));
  return with_children(t, std::move(kids));
}

bool same_head(const Type& a, const Type& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Type::Kind::Base: return a.base() == b.base();
    case Type::Kind::Prod:
    case Type::Kind::Sum: return true;
    case Type::Kind::App: return a.name() == b.name() && a.args().size() == b.args().size();
    default: return false;
  }
}

}  // namespace gadtmap
