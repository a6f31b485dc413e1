#include "gadtmap/wellformed.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gadtmap {

std::string_view to_string(DiagKind k) {
  switch (k) {
    case DiagKind::KMentionsSelf: return "KMentionsSelf";
    case DiagKind::KMentionsProperGadt: return "KMentionsProperGadt";
    case DiagKind::UnknownTypeConstructor: return "UnknownTypeConstructor";
    case DiagKind::TypeArityMismatch: return "TypeArityMismatch";
    case DiagKind::UnboundTypeVariable: return "UnboundTypeVariable";
    case DiagKind::DuplicateConstructor: return "DuplicateConstructor";
  }
  return "?";
}

ValidatedProgram::ValidatedProgram(Program decls) : decls_(std::move(decls)) {
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    const GadtDecl& d = decls_[i];
    bool proper = std::ranges::any_of(
        d.constructors, [&](const ConstructorSig& c) { return is_restricted(c, d.arity); });
    proper_[d.name] = proper;
    for (std::size_t j = 0; j < d.constructors.size(); ++j) {
      ctor_index_.emplace(d.constructors[j].name, std::pair{i, j});
    }
  }
}

const GadtDecl* ValidatedProgram::find_decl(std::string_view name) const {
  auto it = std::ranges::find_if(decls_, [&](const GadtDecl& d) { return d.name == name; });
  return it == decls_.end() ? nullptr : &*it;
}

const GadtDecl& ValidatedProgram::decl(std::string_view name) const {
  const GadtDecl* d = find_decl(name);
  if (!d) throw std::out_of_range("unknown type constructor " + std::string(name));
  return *d;
}

bool ValidatedProgram::has_ctor(std::string_view name) const { return ctor_index_.contains(name); }

const ConstructorSig& ValidatedProgram::ctor(std::string_view name) const {
  auto it = ctor_index_.find(name);
  if (it == ctor_index_.end()) throw std::out_of_range("unknown constructor " + std::string(name));
  return decls_[it->second.first].constructors[it->second.second];
}

const GadtDecl& ValidatedProgram::owner_of(std::string_view name) const {
  auto it = ctor_index_.find(name);
  if (it == ctor_index_.end()) throw std::out_of_range("unknown constructor " + std::string(name));
  return decls_[it->second.first];
}

bool ValidatedProgram::is_proper(std::string_view gadt) const {
  auto it = proper_.find(gadt);
  return it != proper_.end() && it->second;
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diags) {
  std::string s = "program is not well formed";
  if (!diags.empty()) s += ": " + diags.front().message;
  if (diags.size() > 1) s += " (and " + std::to_string(diags.size() - 1) + " more)";
  return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : std::runtime_error(summarize(diags)), diags_(std::move(diags)) {}

bool is_restricted(const ConstructorSig& sig, int arity) {
  if (static_cast<int>(sig.type_vars.size()) != arity) return true;
  for (int l = 0; l < arity; ++l) {
    const Type& k = sig.return_indices[static_cast<std::size_t>(l)];
    if (!k.is_var() || k.name() != sig.type_vars[static_cast<std::size_t>(l)]) return true;
  }
  return false;
}

namespace {

struct Checker {
  const Program& program;
  std::map<std::string, int> arity;
  std::map<std::string, bool> proper;
  std::vector<Diagnostic> out;

  explicit Checker(const Program& p) : program(p) {
    for (const GadtDecl& d : p) {
      arity[d.name] = d.arity;
      proper[d.name] = std::ranges::any_of(
          d.constructors, [&](const ConstructorSig& c) { return is_restricted(c, d.arity); });
    }
  }

  void report(DiagKind k, const GadtDecl& g, const ConstructorSig& c, int index, std::string detail,
              std::string message) {
    out.push_back(Diagnostic{k, g.name, c.name, index, std::move(detail), c.line, std::move(message)});
  }

  /// Constructor names and arities inside one type expression.
  void check_refs(const Type& t, const GadtDecl& g, const ConstructorSig& c, int index,
                  const std::string& where) {
    if (t.kind() == Type::Kind::App) {
      auto it = arity.find(t.name());
      if (it == arity.end()) {
        bool lower = std::islower(static_cast<unsigned char>(t.name()[0])) != 0;
        if (lower && t.args().empty()) {
          report(DiagKind::UnboundTypeVariable, g, c, index, t.name(),
                 "type variable '" + t.name() + "' in " + where + " of " + c.name +
                     " is not bound by its forall");
        } else {
          report(DiagKind::UnknownTypeConstructor, g, c, index, t.name(),
                 "unknown type constructor '" + t.name() + "' in " + where + " of " + c.name);
        }
      } else if (it->second != static_cast<int>(t.args().size())) {
        report(DiagKind::TypeArityMismatch, g, c, index, t.name(),
               "'" + t.name() + "' expects " + std::to_string(it->second) + " arguments in " +
                   where + " of " + c.name + ", got " + std::to_string(t.args().size()));
      }
    }
    for (const Type& a : t.args()) check_refs(a, g, c, index, where);
  }

  void check_index(const Type& k, const GadtDecl& g, const ConstructorSig& c, int index) {
    if (mentions_ctor(k, g.name)) {
      report(DiagKind::KMentionsSelf, g, c, index, g.name,
             "return index " + std::to_string(index) + " of " + c.name + " mentions " + g.name +
                 " itself");
    }
    std::set<std::string> seen;
    collect_proper(k, g.name, seen);
    for (const std::string& d : seen) {
      report(DiagKind::KMentionsProperGadt, g, c, index, d,
             "return index " + std::to_string(index) + " of " + c.name +
                 " mentions the proper GADT " + d);
    }
  }

  void collect_proper(const Type& t, const std::string& self, std::set<std::string>& seen) {
    if (t.kind() == Type::Kind::App && t.name() != self) {
      auto it = proper.find(t.name());
      if (it != proper.end() && it->second) seen.insert(t.name());
    }
    for (const Type& a : t.args()) collect_proper(a, self, seen);
  }

  void run() {
    std::map<std::string, std::string> ctor_owner;
    for (const GadtDecl& g : program) {
      for (const ConstructorSig& c : g.constructors) {
        auto [it, fresh] = ctor_owner.emplace(c.name, g.name);
        if (!fresh) {
          report(DiagKind::DuplicateConstructor, g, c, 0, it->second,
                 "constructor '" + c.name + "' is already declared in " + it->second);
        }
        for (std::size_t j = 0; j < c.arg_types.size(); ++j) {
          check_refs(c.arg_types[j], g, c, static_cast<int>(j + 1),
                     "argument " + std::to_string(j + 1));
        }
        for (std::size_t l = 0; l < c.return_indices.size(); ++l) {
          int index = static_cast<int>(l + 1);
          check_refs(c.return_indices[l], g, c, index, "return index " + std::to_string(index));
          check_index(c.return_indices[l], g, c, index);
        }
      }
    }
  }
};

}  // namespace

std::vector<Diagnostic> check_program(const Program& program) {
  Checker ch(program);
  ch.run();
  return std::move(ch.out);
}

ValidatedProgram validate(const Program& program) {
  std::vector<Diagnostic> diags = check_program(program);
  if (!diags.empty()) throw ValidationError(std::move(diags));
  return ValidatedProgram(program);
}

}  // namespace gadtmap
