#pragma once

#include "ba/automata.hpp"
#include "ba/syntax.hpp"

namespace ba {

// Builders for the defined predicates of base-k arithmetic. All results
// are Delta0. Bound variables use reserved "_"-prefixed names; passing an
// argument that contains one of the names a builder binds is an error.

/// P_k(d): d > 0 and V(d) = d, the powers of k.
FormulaPtr f_pk(TermPtr d);

/// x congruent to y modulo k: exists z <= x + y (x = y + kz or y = x + kz).
FormulaPtr f_congk(TermPtr x, TermPtr y, int k);

/// (x)_d = a: the coefficient of the power d in the expansion of x is a.
/// P_k(d) and exists y < d exists z <= x
///   (x = y + a d + z and (z = 0 or V(z) > d)).
FormulaPtr f_digit(TermPtr x, TermPtr d, int a, int k);

/// x|_d = y: the low digit block, x mod d.
/// P_k(d) and y < d and exists z <= x (x = y + z and (z = 0 or V(z) >= d)).
FormulaPtr f_restrict(TermPtr x, TermPtr d, TermPtr y, int k);

/// g(xs) = d: d is the least power of k strictly above every component.
/// Quantifier free.
FormulaPtr f_g_graph(const std::vector<TermPtr>& xs, TermPtr d, int k);

/// W_{A,q1}(xs, d): A can reach q1 from its initial state by reading the
/// first log_k d letters of the expansion of xs. The run is coded by one
/// bounded existential per state ("_w0", "_w1", ...), followed by the
/// uniqueness, initialization, finalization and transition clauses.
FormulaPtr f_w(const Nfa& a, int q1, const std::vector<int>& xs, int d);
FormulaPtr f_w(const Dfa& a, int q1, const std::vector<int>& xs, int d);

}  // namespace ba
