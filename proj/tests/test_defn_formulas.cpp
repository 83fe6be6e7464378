#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ba/base_automata.hpp"
#include "ba/defn_formulas.hpp"
#include "ba/oracle.hpp"

using namespace ba;

namespace {

// Does some run over the first j letters of the padded expansion of xs
// end in q?
bool reaches(const Nfa& a, int q, const std::vector<Nat>& xs, int j) {
  Nat d = pow_k(a.k, j);
  std::vector<Nat> low(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) low[i] = restrict_to(a.k, xs[i], d);
  Word w = tuple_expansion(a.k, low, j);
  std::vector<int> cur = {a.initial};
  for (const Letter& letter : w) {
    std::vector<int> nxt;
    int code = letter_code(a.k, letter);
    for (int s : cur)
      for (int t : a.next[s][code]) nxt.push_back(t);
    std::sort(nxt.begin(), nxt.end());
    nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
    cur = std::move(nxt);
  }
  return std::find(cur.begin(), cur.end(), q) != cur.end();
}

}  // namespace

TEST_CASE("P_k matches is_power") {
  FormulaPtr pk = f_pk(t_var("d"));
  CHECK(is_delta0(pk));
  for (int k : {2, 3, 5}) {
    for (Nat d = 0; d < pow_k(k, 4); ++d)
      CHECK(eval_delta0(pk, {{"d", d}}, k) == is_power(k, d));
  }
}

TEST_CASE("congruence matches remainders") {
  FormulaPtr cong = f_congk(t_var("x"), t_var("y"), 3);
  CHECK(is_delta0(cong));
  CHECK(eval_delta0(cong, {{"x", Nat(5)}, {"y", Nat(8)}}, 3));
  for (int x = 0; x < 30; ++x)
    for (int y = 0; y < 30; ++y)
      CHECK(eval_delta0(cong, {{"x", Nat(x)}, {"y", Nat(y)}}, 3) ==
            ((x - y) % 3 == 0));
  FormulaPtr cong2 = f_congk(t_var("x"), t_var("y"), 2);
  for (int x = 0; x < 20; ++x)
    for (int y = 0; y < 20; ++y)
      CHECK(eval_delta0(cong2, {{"x", Nat(x)}, {"y", Nat(y)}}, 2) ==
            (x % 2 == y % 2));
}

TEST_CASE("digit formula matches digit_at") {
  for (int k : {2, 3}) {
    for (int a = 0; a < k; ++a) {
      FormulaPtr dig = f_digit(t_var("x"), t_var("d"), a, k);
      CHECK(is_delta0(dig));
      for (Nat x = 0; x < pow_k(k, 3); ++x)
        for (int j = 0; j <= 3; ++j) {
          Nat d = pow_k(k, j);
          CHECK(eval_delta0(dig, {{"x", x}, {"d", d}}, k) ==
                (digit_at(k, x, d) == a));
        }
      // non-powers never satisfy it
      CHECK_FALSE(eval_delta0(dig, {{"x", Nat(5)}, {"d", Nat(k + 1)}}, k));
      CHECK_FALSE(eval_delta0(dig, {{"x", Nat(5)}, {"d", Nat(0)}}, k));
    }
  }
  CHECK(eval_delta0(f_digit(t_var("x"), t_var("d"), 1, 2),
                    {{"x", Nat(13)}, {"d", Nat(4)}}, 2));
}

TEST_CASE("restriction formula matches restrict_to") {
  for (int k : {2, 3}) {
    FormulaPtr res = f_restrict(t_var("x"), t_var("d"), t_var("y"), k);
    CHECK(is_delta0(res));
    for (Nat x = 0; x < pow_k(k, 3); ++x)
      for (int j = 0; j <= 3; ++j) {
        Nat d = pow_k(k, j);
        for (Nat y = 0; y < pow_k(k, 2); ++y)
          CHECK(eval_delta0(res, {{"x", x}, {"d", d}, {"y", y}}, k) ==
                (restrict_to(k, x, d) == y));
      }
  }
  CHECK(eval_delta0(f_restrict(t_var("x"), t_var("d"), t_var("y"), 2),
                    {{"x", Nat(13)}, {"d", Nat(4)}, {"y", Nat(1)}}, 2));
}

TEST_CASE("g graph matches g_bound") {
  FormulaPtr g1 = f_g_graph({t_var("x")}, t_var("d"), 2);
  CHECK(is_delta0(g1));
  CHECK(eval_delta0(g1, {{"x", Nat(0)}, {"d", Nat(1)}}, 2));
  for (Nat x = 0; x < 40; ++x)
    for (Nat d = 0; d < 70; ++d)
      CHECK(eval_delta0(g1, {{"x", x}, {"d", d}}, 2) ==
            (g_bound(2, {x}) == d));
  FormulaPtr g2 = f_g_graph({t_var("x"), t_var("y")}, t_var("d"), 3);
  for (Nat x = 0; x < 30; ++x)
    for (Nat y = 0; y < 30; ++y)
      CHECK(eval_delta0(g2, {{"x", x}, {"y", y}, {"d", g_bound(3, {x, y})}},
                        3));
}

TEST_CASE("reserved names are rejected") {
  CHECK_THROWS_AS(f_congk(t_var("_z"), t_var("y"), 2), std::invalid_argument);
  CHECK_THROWS_AS(f_digit(t_var("_y"), t_var("d"), 0, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(f_restrict(t_var("x"), t_var("_z"), t_var("y"), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(f_w(a_zero(2), 0, {intern("_w0")}, intern("d")),
                  std::invalid_argument);
  CHECK_THROWS_AS(f_w(a_zero(2), 0, {intern("d")}, intern("d")),
                  std::invalid_argument);
  CHECK_THROWS_AS(f_digit(t_var("x"), t_var("d"), 2, 2),
                  std::invalid_argument);
}

TEST_CASE("W spot checks") {
  FormulaPtr w0 = f_w(a_zero(2), 0, {intern("x")}, intern("d"));
  CHECK(is_delta0(w0));
  CHECK(eval_delta0(w0, {{"x", Nat(0)}, {"d", Nat(2)}}, 2));
  CHECK_FALSE(eval_delta0(w0, {{"x", Nat(1)}, {"d", Nat(2)}}, 2));

  FormulaPtr wp = f_w(a_plus(2), 0,
                      {intern("x"), intern("y"), intern("z")}, intern("d"));
  CHECK(eval_delta0(
      wp, {{"x", Nat(3)}, {"y", Nat(1)}, {"z", Nat(4)}, {"d", Nat(8)}}, 2));

  // at d = 1 the run is empty: only the initial state is reached
  CHECK(eval_delta0(w0, {{"x", Nat(5)}, {"d", Nat(1)}}, 2));
  FormulaPtr w1 = f_w(a_zero(2), 1, {intern("x")}, intern("d"));
  CHECK_FALSE(eval_delta0(w1, {{"x", Nat(5)}, {"d", Nat(1)}}, 2));
  // non-powers of k fail P_k(d)
  CHECK_FALSE(eval_delta0(w0, {{"x", Nat(0)}, {"d", Nat(3)}}, 2));
}

TEST_CASE("W matches run simulation on a small grid") {
  for (int k : {2, 3}) {
    Evaluator ev(k);
    for (const Dfa& dfa : {a_zero(k), a_v(k), a_le(k)}) {
      Nfa a = to_nfa(dfa);
      std::vector<int> vars;
      for (int i = 0; i < a.arity; ++i)
        vars.push_back(intern(std::string(1, char('x' + i))));
      int d = intern("d");
      for (int q = 0; q < a.num_states(); ++q) {
        FormulaPtr w = f_w(a, q, vars, d);
        std::vector<Nat> xs(a.arity);
        std::vector<int> counters(a.arity, 0);
        int total = 1;
        for (int i = 0; i < a.arity; ++i) total *= k * k;
        for (int tup = 0; tup < total; ++tup) {
          int rest = tup;
          for (int i = 0; i < a.arity; ++i) {
            xs[i] = rest % (k * k);
            rest /= k * k;
          }
          for (int j = 0; j <= 2; ++j) {
            Nat dval = pow_k(k, j);
            ev.clear_env();
            for (int i = 0; i < a.arity; ++i) ev.set_var(vars[i], &xs[i]);
            ev.set_var(d, &dval);
            CHECK(ev.eval(w) == reaches(a, q, xs, j));
          }
        }
      }
    }
  }
}

TEST_CASE("exactly one W state holds for a Dfa") {
  int x = intern("x"), d = intern("d");
  Dfa a = a_zero(2);
  std::vector<FormulaPtr> ws;
  for (int q = 0; q < a.num_states(); ++q) ws.push_back(f_w(a, q, {x}, d));
  Evaluator ev(2);
  for (int xv = 0; xv < 8; ++xv)
    for (int j = 0; j <= 2; ++j) {
      Nat xval = xv, dval = pow_k(2, j);
      int holds = 0;
      for (const FormulaPtr& w : ws) {
        ev.clear_env();
        ev.set_var(x, &xval);
        ev.set_var(d, &dval);
        if (ev.eval(w)) ++holds;
      }
      CHECK(holds == 1);
    }
}
