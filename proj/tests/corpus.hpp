#pragma once

#include <string>
#include <vector>

#include "ba/defn_formulas.hpp"
#include "ba/syntax.hpp"

namespace ba_tests {

struct Entry {
  std::string name;
  ba::FormulaPtr f;
  // Set when the formula has unbounded quantifiers. Every such entry has
  // witnesses bounded by the sum of its arguments plus k, which the
  // bounded-search fallback uses as its certified bound.
  bool needs_bound = false;
};

inline std::vector<Entry> corpus(int k) {
  using namespace ba;
  auto P = [](const std::string& s) { return parse(s); };
  std::vector<Entry> es = {
      {"zero", P("x = 0")},
      {"succ", P("S(x) = y")},
      {"plus", P("x + y = z")},
      {"vk", P("V(x) = y")},
      {"le", P("x <= y")},
      {"lt", P("x < y")},
      {"eq", P("x = y")},
      {"double", P("x + x = y")},
      {"even", P("E y <= x . x = y + y")},
      {"odd", P("!(E y <= x . x = y + y)")},
      {"v-below", P("V(x) <= x")},
      {"chain-le", P("x <= y & y <= z")},
      {"trichotomy", P("x < y | y < x | x = y")},
      // witness z = y - x is at most y
      {"diff-exists", P("E z. x + z = y"), true},
      {"double-chain", P("x + x = y & y + y = z")},
      {"absorb", P("x + y = x")},
      {"fixpoint-v", P("V(x) = x")},
      {"lit", P("x = 5")},
      {"scalar", P("2 * x = y")},
      {"plus-le", P("x + y <= z")},
      {"v-agree", P("V(x) = V(y)")},
      {"lt-succ", P("x < S(y)")},
      {"mix", P("(x = y | x + x = y) & V(y) <= y")},
      {"bounded-le", P("E z <= y . y = x + z")},
      // universally true, so any search bound refutes nothing
      {"total-order", P("A z. x <= z | z <= x"), true},
      {"succ-between", P("x < y & y <= S(x)")},
      {"pk", f_pk(t_var("d"))},
      {"congk", f_congk(t_var("x"), t_var("y"), k)},
      {"digit1", f_digit(t_var("x"), t_var("d"), 1, k)},
      {"restrict", f_restrict(t_var("x"), t_var("d"), t_var("y"), k)},
      {"g1", f_g_graph({t_var("x")}, t_var("d"), k)},
      {"g2", f_g_graph({t_var("x"), t_var("y")}, t_var("d"), k)},
  };
  return es;
}

}  // namespace ba_tests
