#include "ba/defn_formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace ba {

namespace {

void check_free_of(const std::vector<TermPtr>& args,
                   const std::vector<int>& bound_syms) {
  for (const TermPtr& t : args)
    for (int sym : t->free_syms)
      if (std::find(bound_syms.begin(), bound_syms.end(), sym) !=
          bound_syms.end())
        throw std::invalid_argument("formula builder: argument uses the "
                                    "reserved variable '" +
                                    symbol_name(sym) + "'");
}

void check_digit(int a, int k) {
  check_base(k);
  if (a < 0 || a >= k)
    throw std::invalid_argument("f_digit: digit out of range");
}

}  // namespace

FormulaPtr f_pk(TermPtr d) {
  return f_and(f_lt(t_zero(), d), f_eq(t_vk(d), d));
}

FormulaPtr f_congk(TermPtr x, TermPtr y, int k) {
  check_base(k);
  int z = intern("_z");
  check_free_of({x, y}, {z});
  TermPtr zv = t_var(z);
  return f_bexists(z, t_plus(x, y),
                   f_or(f_eq(x, t_plus(y, t_scalar(k, zv))),
                        f_eq(y, t_plus(x, t_scalar(k, zv)))));
}

FormulaPtr f_digit(TermPtr x, TermPtr d, int a, int k) {
  check_digit(a, k);
  int y = intern("_y");
  int z = intern("_z");
  check_free_of({x, d}, {y, z});
  TermPtr yv = t_var(y), zv = t_var(z);
  FormulaPtr matrix =
      f_and(f_eq(x, t_plus(t_plus(yv, t_scalar(a, d)), zv)),
            f_or(f_eq(zv, t_zero()), f_lt(d, t_vk(zv))));
  return f_and(f_pk(d),
               f_bexists(y, d,
                         f_and(f_lt(yv, d), f_bexists(z, x, matrix))));
}

FormulaPtr f_restrict(TermPtr x, TermPtr d, TermPtr y, int k) {
  check_base(k);
  int z = intern("_z");
  check_free_of({x, d, y}, {z});
  TermPtr zv = t_var(z);
  return f_and(
      f_and(f_pk(d), f_lt(y, d)),
      f_bexists(z, x,
                f_and(f_eq(x, t_plus(y, zv)),
                      f_or(f_eq(zv, t_zero()), f_le(d, t_vk(zv))))));
}

FormulaPtr f_g_graph(const std::vector<TermPtr>& xs, TermPtr d, int k) {
  check_base(k);
  if (xs.empty()) throw std::invalid_argument("f_g_graph: no arguments");
  std::vector<FormulaPtr> zeros;
  for (const TermPtr& x : xs) zeros.push_back(f_eq(x, t_zero()));
  FormulaPtr all_zero = f_and(f_and_all(zeros), f_eq(d, t_lit(1)));
  std::vector<FormulaPtr> max_cases;
  for (const TermPtr& xi : xs) {
    std::vector<FormulaPtr> parts;
    for (const TermPtr& xj : xs) parts.push_back(f_le(xj, xi));
    parts.push_back(f_lt(xi, d));
    parts.push_back(f_le(d, t_scalar(k, xi)));
    max_cases.push_back(f_and_all(parts));
  }
  return f_or(all_zero, f_and(f_pk(d), f_or_all(max_cases)));
}

FormulaPtr f_w(const Nfa& a, int q1, const std::vector<int>& xs, int d) {
  int k = a.k;
  int n = a.num_states();
  if (q1 < 0 || q1 >= n) throw std::invalid_argument("f_w: bad state");
  if (static_cast<int>(xs.size()) != a.arity)
    throw std::invalid_argument("f_w: variable count != arity");

  std::vector<int> w(n);
  for (int q = 0; q < n; ++q) w[q] = intern("_w" + std::to_string(q));
  int dp = intern("_d1");
  {
    std::vector<int> reserved = w;
    reserved.push_back(dp);
    std::vector<TermPtr> args = {t_var(d)};
    for (int x : xs) args.push_back(t_var(x));
    for (int x : xs)
      if (x == d)
        throw std::invalid_argument("f_w: d must be distinct from xs");
    check_free_of(args, reserved);
  }

  TermPtr dv = t_var(d);
  TermPtr dpv = t_var(dp);
  auto wv = [&](int q) { return t_var(w[q]); };

  // exactly one active state at each power position d' <= d
  std::vector<FormulaPtr> unique_cases;
  for (int q = 0; q < n; ++q) {
    std::vector<FormulaPtr> parts = {f_digit(wv(q), dpv, 1, k)};
    for (int q2 = 0; q2 < n; ++q2)
      if (q2 != q) parts.push_back(f_digit(wv(q2), dpv, 0, k));
    unique_cases.push_back(f_and_all(parts));
  }
  FormulaPtr uniqueness =
      f_bforall(dp, dv, f_implies(f_pk(dpv), f_or_all(unique_cases)));

  FormulaPtr init = f_digit(wv(a.initial), t_lit(1), 1, k);
  FormulaPtr final_clause = f_digit(wv(q1), dv, 1, k);

  // every active state steps along some transition consistent with the
  // digits of xs
  std::vector<FormulaPtr> steps;
  for (int q = 0; q < n; ++q) {
    std::vector<FormulaPtr> moves;
    for (std::size_t c = 0; c < a.num_letters(); ++c) {
      Letter letter = code_letter(k, a.arity, static_cast<int>(c));
      for (int q2 : a.next[q][c]) {
        std::vector<FormulaPtr> parts = {
            f_digit(wv(q2), t_scalar(k, dpv), 1, k)};
        for (int i = 0; i < a.arity; ++i)
          parts.push_back(f_digit(t_var(xs[i]), dpv, letter.digits[i], k));
        moves.push_back(f_and_all(parts));
      }
    }
    steps.push_back(f_implies(f_digit(wv(q), dpv, 1, k), f_or_all(moves)));
  }
  FormulaPtr transition = f_bforall(
      dp, dv,
      f_implies(f_and(f_lt(dpv, dv), f_pk(dpv)), f_and_all(steps)));

  FormulaPtr body = f_and_all(
      {uniqueness, init, final_clause, transition});
  for (int q = 0; q < n; ++q)
    body = f_and(f_lt(wv(q), t_scalar(k, dv)), body);
  for (int q = n; q-- > 0;) body = f_bexists(w[q], t_scalar(k, dv), body);
  return f_and(f_pk(dv), body);
}

FormulaPtr f_w(const Dfa& a, int q1, const std::vector<int>& xs, int d) {
  return f_w(to_nfa(a), q1, xs, d);
}

}  // namespace ba
