#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gadtmap/report.hpp"

namespace gadtmap::test {

inline std::string corpus_path(const std::string& name) {
  return std::string(GADTMAP_CORPUS_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ValidatedProgram load(const std::string& corpus_file) {
  return validate(parse_program(read_text(corpus_path(corpus_file))));
}

inline AnalysisReport run(const std::string& corpus_file, const std::string& term,
                          const std::string& spec, bool int_literals = false,
                          std::optional<int> verify_depth = std::nullopt) {
  ValidatedProgram vp = load(corpus_file);
  return analyze(vp, term, spec, AnalyzeOptions{int_literals, verify_depth});
}

inline std::string form_text(const AnalysisReport& r) {
  std::string s;
  for (std::size_t i = 0; i < r.form.form.size(); ++i) s += (i ? ", " : "") + pretty(r.form.form[i]);
  return s;
}

/// Variable renaming between two constraint systems. Kinds must agree and
/// the mapping must stay injective in both directions.
class Renaming {
 public:
  bool bind(const FunVar& a, const FunVar& b) {
    if (a.kind != b.kind) return false;
    auto fa = fwd_.find(a.name());
    auto fb = bwd_.find(b.name());
    if (fa != fwd_.end() || fb != bwd_.end()) {
      return fa != fwd_.end() && fb != bwd_.end() && fa->second == b.name() && fb->second == a.name();
    }
    fwd_[a.name()] = b.name();
    bwd_[b.name()] = a.name();
    return true;
  }

  bool unify(const FunExpr& a, const FunExpr& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case FunExpr::Kind::Var: return bind(a.var(), b.var());
      case FunExpr::Kind::Id: return a.type() == b.type();
      case FunExpr::Kind::Opaque: return a.type() == b.type() && a.name() == b.name();
      case FunExpr::Kind::Prod:
      case FunExpr::Kind::Sum: return unify(a.left(), b.left()) && unify(a.right(), b.right());
      case FunExpr::Kind::Lift:
        if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
        for (std::size_t i = 0; i < a.args().size(); ++i) {
          if (!unify(a.args()[i], b.args()[i])) return false;
        }
        return true;
    }
    return false;
  }

 private:
  std::map<std::string, std::string> fwd_;
  std::map<std::string, std::string> bwd_;
};

/// True when `actual` and `expected` are equal as multisets of ordered
/// pairs up to a kind-preserving bijective renaming of function variables.
inline bool same_up_to_renaming(const std::vector<Constraint>& actual,
                                const std::vector<Constraint>& expected) {
  if (actual.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  std::function<bool(std::size_t, const Renaming&)> go = [&](std::size_t i, const Renaming& r) {
    if (i == actual.size()) return true;
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (used[j]) continue;
      Renaming next = r;
      if (!next.unify(actual[i].lhs, expected[j].lhs) || !next.unify(actual[i].rhs, expected[j].rhs)) continue;
      used[j] = true;
      if (go(i + 1, next)) return true;
      used[j] = false;
    }
    return false;
  };
  return go(0, Renaming{});
}

inline std::vector<Constraint> parse_constraints(const std::vector<std::string>& texts) {
  std::vector<Constraint> out;
  for (const std::string& t : texts) out.push_back(parse_constraint(t));
  return out;
}

/// Head names of the essential constructor occurrences, in preorder.
inline std::vector<std::string> essential_ctors(const AnalysisReport& r) {
  std::vector<std::string> out;
  std::vector<Path> sorted = r.adm.annotation.essential;
  std::sort(sorted.begin(), sorted.end());
  for (const Path& p : sorted) {
    const Term& t = subterm(r.term, p);
    if (t.kind() == Term::Kind::Ctor) out.push_back(t.name());
  }
  return out;
}

}  // namespace gadtmap::test
