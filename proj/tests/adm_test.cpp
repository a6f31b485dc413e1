#include <doctest.h>

#include <set>

#include "gadtmap/adm.hpp"
#include "gadtmap/solver.hpp"
#include "support.hpp"

using namespace gadtmap;
using gadtmap::test::load;

namespace {

FunExpr h(int i, const std::string& label) { return FunExpr::var(FunVar{FunVar::Kind::H, label, i, 0}); }
FunExpr g(int i, const std::string& label) { return FunExpr::var(FunVar{FunVar::Kind::G, label, i, 0}); }

AdmResult run_adm(const ValidatedProgram& vp, const std::string& term, const std::string& spec,
                  bool ints = false) {
  TypedTerm t = infer(parse_term(term, vp.decls()), vp, InferOptions{ints});
  return adm_run(t, parse_spec(spec, vp.decls()), vp);
}

std::vector<std::string> rendered(const std::vector<Constraint>& cs) {
  std::vector<std::string> out;
  for (const Constraint& c : cs) out.push_back(pretty(c));
  return out;
}

}  // namespace

TEST_SUITE("adm") {
  TEST_CASE("lifting types to function expressions") {
    CHECK(lift_type(Type::var("b1"), {{"b1", g(1, "1")}}) == g(1, "1"));
    CHECK(lift_type(Type::base(BaseType::Nat), {}) == FunExpr::id(Type::base(BaseType::Nat)));
    Type t = parse_type("G b1 * G (b2 * b2)");
    FunExpr e = lift_type(t, {{"b1", h(1, "1")}, {"b2", h(2, "1")}});
    CHECK(pretty(e) == "G h1^1 * G (h2^1 * h2^1)");
    CHECK(pretty(lift_type(parse_type("List Nat * b1"), {{"b1", g(1, "1")}})) == "id@(List Nat) * g1^1");
    CHECK_THROWS_AS(lift_type(Type::var("b9"), {}), InternalInvariantViolation);
  }

  TEST_CASE("matching problems") {
    std::vector<Assignment> a = match_spec(parse_type("b1"), parse_type("y1^1 * y2^1"), 1);
    REQUIRE(a.size() == 1);
    CHECK(a[0].form == Assignment::Form::Beta);
    CHECK(a[0].var == "b1");
    CHECK(pretty(a[0].other) == "y1^1 * y2^1");

    std::vector<Assignment> v = match_spec(parse_type("b1 * b2"), parse_type("y1 * y2"), 1);
    REQUIRE(v.size() == 2);
    CHECK(v[0].form == Assignment::Form::Sigma);
    CHECK(v[0].var == "y1");
    CHECK(v[0].other == Type::var("b1"));
    CHECK(v[1].var == "y2");

    std::vector<Assignment> n = match_spec(parse_type("y2^2"), parse_type("Nat"), 1);
    REQUIRE(n.size() == 1);
    CHECK(n[0].form == Assignment::Form::Beta);
    CHECK(n[0].other == Type::base(BaseType::Nat));

    std::vector<Assignment> l = match_spec(parse_type("y1^2"), parse_type("List y1^4.1"), 1);
    REQUIRE(l.size() == 1);
    CHECK(pretty(l[0]).find("List y1^4.1") != std::string::npos);

    CHECK_THROWS_AS(match_spec(parse_type("Nat"), parse_type("List y1"), 1), NotTopUnifiable);
    CHECK_THROWS_AS(match_spec(parse_type("b1 * b2"), parse_type("y1 + y2"), 1), SpecMismatch);
  }

  TEST_CASE("tau tuples") {
    std::vector<std::string> gammas{"y1^1", "y2^1"};
    CHECK(compute_taus(match_spec(parse_type("b1"), parse_type("y1^1 * y2^1"), 1), gammas) ==
          std::vector<Type>{Type::var("y1^1"), Type::var("y2^1")});

    std::vector<Type> inj = compute_taus(match_spec(parse_type("G y1^1 * G (y2^1 * y2^1)"), parse_type("y1^2"), 1),
                                         {"y1^2"});
    REQUIRE(inj.size() == 1);
    CHECK(pretty(inj[0]) == "G y1^1 * G (y2^1 * y2^1)");

    std::vector<Type> flat = compute_taus(match_spec(parse_type("y1^2"), parse_type("List y1^4.1"), 1), {"y1^4.1"});
    CHECK(flat == std::vector<Type>{Type::var("y1^4.1")});
  }

  TEST_CASE("step v constraints") {
    auto as = match_spec(parse_type("b1"), parse_type("y1^1 * y2^1"), 1);
    auto cs = emit_step_five(as, {{"b1", g(1, "1")}}, {{"y1^1", h(1, "1")}, {"y2^1", h(2, "1")}}, "1");
    CHECK(rendered(cs) == std::vector<std::string>{"<h1^1 * h2^1, g1^1>"});
    CHECK(cs[0].step == "v");

    auto nat = match_spec(parse_type("y2^2"), parse_type("Nat"), 1);
    CHECK(rendered(emit_step_five(nat, {{"y2^2", g(1, "4.2.2")}}, {}, "4.2.2")) ==
          std::vector<std::string>{"<id@Nat, g1^4.2.2>"});

    auto sigma_only = match_spec(parse_type("b1 * b2"), parse_type("y1 * y2"), 1);
    CHECK(emit_step_five(sigma_only, {{"b1", g(1, "1")}, {"b2", g(2, "1")}}, {}, "1").empty());
  }

  TEST_CASE("step vi constraints") {
    std::vector<Assignment> as = match_spec(parse_type("b1"), parse_type("y1"), 1);
    std::vector<Assignment> second = match_spec(parse_type("b2"), parse_type("y1"), 2);
    as.insert(as.end(), second.begin(), second.end());
    auto cs = emit_step_six(as, {"y1"}, {{"b1", g(1, "1")}, {"b2", g(2, "1")}}, "1");
    CHECK(rendered(cs) == std::vector<std::string>{"<g2^1, g1^1>"});
    CHECK(cs[0].step == "vi");

    auto repeated = match_spec(parse_type("y2^2 * y2^2"), parse_type("y1^4.2 * y2^4.2"), 1);
    CHECK(emit_step_six(repeated, {"y1^4.2", "y2^4.2"}, {{"y2^2", g(1, "4.2")}}, "4.2").empty());
  }

  TEST_CASE("R_j") {
    CHECK(pretty(compute_rj(Type::var("A"), {"A"}, {parse_type("G y1^1 * G (y2^1 * y2^1)")})) ==
          "G y1^1 * G (y2^1 * y2^1)");
    CHECK(pretty(compute_rj(parse_type("List (G a)"), {"a"}, {Type::var("y1^4.1")})) == "List (G y1^4.1)");
    CHECK(compute_rj(Type::base(BaseType::Nat), {"A"}, {Type::var("y")}) == Type::base(BaseType::Nat));
  }

  TEST_CASE("Seq root call") {
    ValidatedProgram vp = load("seq.gadt");
    AdmResult r = run_adm(vp, "pair (pair (const tt) (const 2)) (const 5)", "Seq b1", true);
    CHECK(r.calls.size() == 5);
    CHECK(r.constraints.size() == 7);
    CHECK(rendered(r.calls[0].emitted) == std::vector<std::string>{"<g1^1, f1>", "<h1^1 * h2^1, g1^1>"});
    CHECK(r.calls[0].kind == 'D');
    CHECK(pretty(r.calls[0].rjs[0]) == "Seq y1^1");
    const CallTrace& leaf = r.calls[2];
    CHECK(leaf.label == "1.1.1");
    CHECK(leaf.rjs == std::vector<Type>{Type::var("y1^1.1")});
    CHECK(leaf.zetas.size() == 1);
    CHECK(leaf.zetas[0].empty());
    std::vector<std::string> order;
    for (const CallTrace& c : r.calls) order.push_back(c.label);
    CHECK(order == std::vector<std::string>{"1", "1.1", "1.1.1", "1.1.2", "1.2"});
  }

  TEST_CASE("pairs against products") {
    ValidatedProgram vp = load("g.gadt");
    AdmResult r = run_adm(vp, "(1, tt)", "b1 * b2");
    CHECK(r.calls.size() == 1);
    CHECK(r.calls[0].kind == 'A');
    CHECK(rendered(r.constraints) == std::vector<std::string>{"<g1^1, f1>", "<g2^1, f2>"});

    AdmResult deep = run_adm(vp, "(cons 1 nil, tt)", "List b1 * b2");
    CHECK(deep.calls.size() == 3);
    CHECK(rendered(deep.calls[0].emitted) == std::vector<std::string>{"<List g1^1, f1>", "<g2^1, f2>"});
    CHECK(deep.calls[1].funs == std::vector<FunExpr>{parse_fun_expr("g1^1")});
  }

  TEST_CASE("injections only recurse into the present branch") {
    ValidatedProgram vp = load("g.gadt");
    AdmResult l = run_adm(vp, "(inl (cons 1 nil) : List Nat + List Bool)", "List b1 + List b2");
    CHECK(l.calls[0].kind == 'B');
    CHECK(rendered(l.calls[0].emitted) == std::vector<std::string>{"<List g1^1, f1>", "<List g2^1, f2>"});
    REQUIRE(l.calls.size() == 3);
    CHECK(l.calls[1].label == "1.1");
    CHECK(l.calls[1].path == Path{0});

    AdmResult r = run_adm(vp, "(inr (cons 1 nil) : List Bool + List Nat)", "List b1 + List b2");
    CHECK(r.calls[0].kind == 'C');
    REQUIRE(r.calls.size() == 3);
    CHECK(pretty(r.calls[1].spec) == "List b2");
  }

  TEST_CASE("labelled constraints on a nested list") {
    ValidatedProgram vp = load("g.gadt");
    AdmResult r = run_adm(vp, "cons (cons 1 (cons 2 nil)) (cons (cons 3 nil) nil)", "List b1");
    CHECK(rendered(r.constraints) ==
          std::vector<std::string>{"<g1^1, f1>", "<g1^1.2, g1^1>", "<g1^1.2.2, g1^1.2>"});
  }

  TEST_CASE("two indices forced equal") {
    ValidatedProgram vp = load("misc.gadt");
    AdmResult r = run_adm(vp, "same 1", "H b1 b2");
    bool found = false;
    for (const Constraint& c : r.constraints) {
      if (c.step == "vi") {
        CHECK(pretty(c) == "<g2^1, g1^1>");
        found = true;
      }
    }
    CHECK(found);
  }

  TEST_CASE("root mismatches") {
    ValidatedProgram vp = validate(parse_program(
        "data Seq : Set -> Set where\n  const : forall a. a -> Seq a\n"
        "data List : Set -> Set where\n  nil : forall a. List a\n"));
    CHECK_THROWS_AS(run_adm(vp, "const tt", "List b1"), SpecMismatch);
    CHECK_THROWS_AS(run_adm(vp, "(nil, nil)", "List b1 + b2"), SpecMismatch);
    CHECK_THROWS_AS(run_adm(vp, "nil", "b1"), SpecMismatch);
  }

  TEST_CASE("fresh variables are never shared between calls") {
    ValidatedProgram vp = load("g.gadt");
    AdmResult r = run_adm(vp, "projpair (inj (flat (cons const nil), pairing (inj 2) const))", "G b1");
    std::set<std::string> names;
    std::set<int> orders;
    int last = -1;
    for (const FunVar& f : r.roots) {
      names.insert(f.name());
      orders.insert(f.order);
    }
    std::set<std::string> gammas;
    for (const CallTrace& c : r.calls) {
      for (const FunVar& v : c.g) {
        CHECK(names.insert(v.name()).second);
        CHECK(orders.insert(v.order).second);
        CHECK(v.order > last);
        last = v.order;
      }
      for (const FunVar& v : c.h) {
        CHECK(names.insert(v.name()).second);
        CHECK(orders.insert(v.order).second);
        CHECK(v.order > last);
        last = v.order;
      }
      for (const std::string& y : c.gammas) CHECK(gammas.insert(y).second);
    }
  }

  TEST_CASE("every emitted constraint is top-unifiable") {
    ValidatedProgram vp = load("g.gadt");
    for (const char* term : {"projpair (inj (inj (cons 2 nil), pairing (inj 2) const))",
                             "projpair (inj (flat (cons const nil), pairing (inj 2) const))",
                             "flat (cons (inj 1) (cons (inj 2) nil))"}) {
      AdmResult r = run_adm(vp, term, "G b1");
      for (const Constraint& c : r.constraints) {
        CAPTURE(pretty(c));
        CHECK_NOTHROW(decompose(c));
      }
    }
  }
}
