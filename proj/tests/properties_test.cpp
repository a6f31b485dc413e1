#include <doctest.h>

#include <json.hpp>

#include "random_terms.hpp"
#include "support.hpp"

using namespace gadtmap;
using namespace gadtmap::test;

namespace {

const std::vector<std::string> kNestedHeads{"List", "PTree", "Bush", "Rose"};

std::vector<RandomCase> nested_cases(unsigned seed, int count, const ValidatedProgram& vp) {
  TermGen gen(vp, seed);
  std::mt19937 pick(seed + 1);
  std::vector<RandomCase> out;
  for (int i = 0; i < count; ++i) out.push_back(random_case(gen, pick, kNestedHeads, 5));
  return out;
}

/// lhs = Psi phi and rhs = Psi psi for one skeleton Psi, with the variables
/// of phi and psi in one-to-one correspondence and disjoint.
bool same_skeleton(const FunExpr& a, const FunExpr& b, std::map<std::string, std::string>& fwd,
                   std::map<std::string, std::string>& bwd) {
  if (a.is_var() && b.is_var()) {
    auto [f, fnew] = fwd.emplace(a.var().name(), b.var().name());
    auto [g, gnew] = bwd.emplace(b.var().name(), a.var().name());
    return f->second == b.var().name() && g->second == a.var().name();
  }
  if (a.is_var() || b.is_var()) return false;
  if (a.kind() == FunExpr::Kind::Id || b.kind() == FunExpr::Kind::Id) return a == b;
  if (!same_head(a, b)) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (!same_skeleton(a.args()[i], b.args()[i], fwd, bwd)) return false;
  }
  return true;
}

bool psi_shaped(const Constraint& c) {
  std::map<std::string, std::string> fwd;
  std::map<std::string, std::string> bwd;
  if (!same_skeleton(c.lhs, c.rhs, fwd, bwd)) return false;
  for (const auto& [l, r] : fwd) {
    if (bwd.contains(l)) return false;
  }
  return true;
}

int order_of(const FunVar& v, const AdmResult& adm) {
  for (const FunVar& f : adm.roots) {
    if (f == v) return f.order;
  }
  for (const CallTrace& c : adm.calls) {
    for (const FunVar& g : c.g) {
      if (g == v) return g.order;
    }
    for (const FunVar& h : c.h) {
      if (h == v) return h.order;
    }
  }
  return -1;
}

std::vector<AnalysisReport> corpus_reports() {
  std::vector<AnalysisReport> out;
  auto doc = nlohmann::json::parse(read_text(corpus_path("cases.json")));
  for (const auto& c : doc) {
    out.push_back(run(c["file"], c["term"], c["spec"], c["intLiterals"].get<bool>()));
  }
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("no constraints on nested types: bare variables and pure chains") {
    ValidatedProgram vp = load("nested.gadt");
    int checked = 0;
    for (const RandomCase& c : nested_cases(7, 250, vp)) {
      CAPTURE(pretty(c.term));
      CAPTURE(pretty(c.spec.shape));
      AnalysisReport r = analyze(vp, c.term, c.spec);
      CHECK(pure_variable_chain(r) == "");
      CHECK(r.form.free_count == 1);
      for (const Constraint& k : r.adm.constraints) {
        CAPTURE(pretty(k));
        CHECK(psi_shaped(k));
      }
      ++checked;
    }
    CHECK(checked == 250);
  }

  TEST_CASE("random nested terms agree with the oracle") {
    ValidatedProgram vp = load("nested.gadt");
    for (const RandomCase& c : nested_cases(11, 60, vp)) {
      CAPTURE(pretty(c.term));
      AnalysisReport r = analyze(vp, c.term, c.spec, AnalyzeOptions{false, 2});
      REQUIRE(r.verify.has_value());
      CHECK(r.verify->agrees());
      CHECK(r.verify->mappable == r.verify->candidates);
    }
  }

  TEST_CASE("random terms round trip and satisfy the identity law") {
    ValidatedProgram vp = load("nested.gadt");
    for (const RandomCase& c : nested_cases(13, 100, vp)) {
      CAPTURE(pretty(c.term));
      CHECK(parse_term(pretty(c.term), vp.decls()) == c.term);
      TypedTerm t = infer(c.term, vp);
      std::optional<Term> same = map_apply(FunExpr::id(t.type_at({})), t, {}, vp);
      REQUIRE(same.has_value());
      CHECK(*same == c.term);
    }
  }

  TEST_CASE("solved systems are idempotent and oriented") {
    for (const AnalysisReport& r : corpus_reports()) {
      REQUIRE(r.status == Status::Mappable);
      for (const FunVar& f : r.adm.roots) CHECK(r.solved.find(f) != nullptr);
      for (const auto& [v, e] : r.solved.bindings) {
        CAPTURE(v.name());
        CHECK(r.solved.apply(e) == e);
        for (const FunVar& w : fun_vars(e)) {
          CHECK(order_of(w, r.adm) > order_of(v, r.adm));
          CHECK(r.solved.find(w) == nullptr);
        }
      }
    }
  }

  TEST_CASE("analysis is deterministic") {
    auto doc = nlohmann::json::parse(read_text(corpus_path("cases.json")));
    for (const auto& c : doc) {
      AnalysisReport a = run(c["file"], c["term"], c["spec"], c["intLiterals"].get<bool>());
      AnalysisReport b = run(c["file"], c["term"], c["spec"], c["intLiterals"].get<bool>());
      CHECK(render_json(a) == render_json(b));
      REQUIRE(a.solved.bindings.size() == b.solved.bindings.size());
      for (std::size_t i = 0; i < a.solved.bindings.size(); ++i) {
        CHECK(a.solved.bindings[i].first == b.solved.bindings[i].first);
        CHECK(a.solved.bindings[i].second == b.solved.bindings[i].second);
      }
    }
  }

  TEST_CASE("every constraint is top-unifiable across the corpus") {
    for (const AnalysisReport& r : corpus_reports()) {
      for (const Constraint& c : r.adm.constraints) {
        CAPTURE(pretty(c));
        CHECK_NOTHROW(decompose(c));
      }
    }
  }

  TEST_CASE("recursive calls keep the call invariants") {
    ValidatedProgram vp = load("g.gadt");
    TermGen gen(vp, 17);
    std::mt19937 pick(18);
    for (int i = 0; i < 100; ++i) {
      RandomCase c = random_case(gen, pick, {"List"}, 5);
      TypedTerm t = infer(c.term, vp);
      CHECK_NOTHROW(adm_run(t, c.spec, vp));
      const Type& elem = t.type_at({}).args()[0];
      if (elem.kind() == Type::Kind::App) {
        CHECK_NOTHROW(adm_run(t, parse_spec("List (List b1)", vp.decls()), vp));
      }
    }
  }
}
