#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ba/defn_formulas.hpp"
#include "ba/theory_suite.hpp"

using namespace ba;

TEST_CASE("axiom suite holds on grid and random samples") {
  for (int k : {2, 3}) {
    CAPTURE(k);
    CheckReport rep = run_suite(axiom_suite(k), k, pow_k(k, 4), 100, 42);
    CHECK(rep.cases.size() == 25);
    for (const CaseResult& r : rep.cases) {
      CAPTURE(r.name);
      CHECK(r.passed);
      CHECK(r.points > 0);
    }
    CHECK(rep.passed);
  }
}

TEST_CASE("weakened axiom is caught with a real counterexample") {
  for (int k : {2, 3}) {
    CAPTURE(k);
    PropertyCase bad = mutated_v2(k);
    CheckReport rep = run_suite({bad}, k, pow_k(k, 4), 100, 42);
    CHECK(!rep.passed);
    REQUIRE(rep.cases.size() == 1);
    const CaseResult& r = rep.cases[0];
    CHECK(!r.passed);
    REQUIRE(!r.counterexample.empty());
    // the reported assignment must actually falsify the matrix
    CHECK(!eval_delta0(bad.matrix, r.counterexample, k));
    // and the run is reproducible
    CheckReport again = run_suite({bad}, k, pow_k(k, 4), 100, 42);
    CHECK(report_json(again) == report_json(rep));
  }
}

TEST_CASE("comprehension witness values") {
  FormulaPtr le4 = f_le(t_var("dp"), t_lit(4));
  CHECK(comp_witness(2, 16, le4, intern("dp"), {}) == 7);
  CHECK(comp_witness(2, 16, f_false(), intern("dp"), {}) == 0);
  CHECK(comp_witness(3, 27, f_true(), intern("dp"), {}) == 13);
  // with a parameter: dp <= V(y) picks out the power divisors of y = 12
  FormulaPtr div2 = f_le(t_var("dp"), t_vk(t_var("y")));
  CHECK(comp_witness(2, 32, div2, intern("dp"), {{"y", 12}}) == 7);
  CHECK_THROWS_AS(comp_witness(2, 12, f_true(), intern("dp"), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      comp_witness(2, 16, f_exists("u", f_eq(t_var("u"), t_var("dp"))),
                   intern("dp"), {}),
      std::invalid_argument);
}

TEST_CASE("witness digits match the sample condition") {
  for (int k : {2, 3}) {
    for (auto& [name, phi] :
         std::vector<std::pair<const char*, FormulaPtr>>{
             {"le", f_le(t_var("dp"), t_var("y"))},
             {"pk-succ", f_pk(t_succ(t_var("dp")))}}) {
      CAPTURE(k);
      CAPTURE(name);
      Nat d = pow_k(k, 5), y = 6;
      Nat w = comp_witness(k, d, phi, intern("dp"), {{"y", y}});
      CHECK(w < d);
      for (Nat p = 1; p < d; p *= k) {
        Assignment a{{"dp", p}, {"y", y}};
        CHECK(digit_at(k, w, p) == (eval_delta0(phi, a, k) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("lemma suites hold on grid and random samples") {
  for (int k : {2, 3}) {
    CAPTURE(k);
    CheckReport rep = run_suite(lemma_suites(k), k, pow_k(k, 4), 100, 42);
    CHECK(rep.cases.size() == 42);
    for (const CaseResult& r : rep.cases) {
      CAPTURE(r.name);
      CHECK(r.passed);
    }
    CHECK(rep.passed);
  }
}

TEST_CASE("language closure facts on random automata") {
  for (int k : {2, 3}) {
    CAPTURE(k);
    CheckReport rep = closure_suite(k, 100, 5, 42);
    CHECK(rep.cases.size() == 5);
    for (const CaseResult& r : rep.cases) {
      CAPTURE(r.name);
      CHECK(r.passed);
      CHECK(r.points == 100);
    }
  }
}

TEST_CASE("decide corpus sentences have the recorded truth values") {
  CHECK(decide_corpus().size() == 25);
  CheckReport rep = decide_suite();
  CHECK(rep.cases.size() == 25);
  for (const CaseResult& r : rep.cases) {
    CAPTURE(r.name);
    CHECK(r.passed);
  }
  CHECK(rep.passed);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  auto cases = axiom_suite(2);
  CheckReport a = run_suite(cases, 2, 16, 10, 7);
  CheckReport b = run_suite(cases, 2, 16, 10, 7);
  CHECK(report_json(a) == report_json(b));
  CHECK(report_text(a) == report_text(b));
  CHECK(report_text(a).find("PASS add-comm") != std::string::npos);
  CHECK(report_json(a).find("\"seed\": 7") != std::string::npos);
}

TEST_CASE("empty suite reports success") {
  CheckReport rep = run_suite({}, 2, 16, 10, 1);
  CHECK(rep.passed);
  CHECK(report_text(rep) == "ok 0/0 cases, seed=1\n");
}
