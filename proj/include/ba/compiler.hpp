#pragma once

#include <vector>

#include "ba/automata.hpp"
#include "ba/oracle.hpp"
#include "ba/syntax.hpp"

namespace ba {

/// A formula compiled to automaton form. The automaton is total and
/// padding-closed, reads one track per context variable, and accepts
/// exactly the expansions of the satisfying tuples.
struct CompiledFormula {
  Dfa dfa;
  VarContext context;
  int k = 2;
};

/// Translates any formula to a CompiledFormula by structural induction
/// after desugaring and flattening: atoms map to the base automata,
/// negation to complement, conjunction to a context-aligned product, and
/// existential quantification to projection followed by determinization
/// and zero saturation.
CompiledFormula compile(const FormulaPtr& f, int k);

/// Truth of a sentence, via an arity-0 compile. Throws
/// std::invalid_argument when the formula has free variables.
bool decide(const FormulaPtr& sentence, int k);

/// The first `limit` satisfying assignments, ordered by the length of the
/// longest component expansion and then lexicographically on the tuple.
std::vector<Assignment> solve(const FormulaPtr& f, int k, std::size_t limit);

/// Number of satisfying tuples with every component below k^L.
Nat count(const FormulaPtr& f, int k, int L);

}  // namespace ba
