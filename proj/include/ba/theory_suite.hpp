#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ba/oracle.hpp"
#include "ba/syntax.hpp"

namespace ba {

/// One checkable statement: a quantifier-free or bounded matrix together
/// with the variables it is sampled over. Truth in N over the sample grid
/// is the judgment; no proof search is attempted.
struct PropertyCase {
  std::string name;
  FormulaPtr matrix;              // bounded-quantifier form only
  std::vector<int> sampled_vars;  // covers the matrix's free variables
  std::vector<bool> power_var;    // sample only powers of k at these slots
  // When nonzero, grid components and random samples for this case are
  // capped at k^cap_exp. Used by the automaton-encoding cases, whose
  // evaluation cost grows quickly with the order of d.
  int cap_exp = 0;
};

struct CaseResult {
  std::string name;
  bool passed = true;
  long points = 0;  // grid points evaluated
  Assignment counterexample;
  double seconds = 0;
};

struct CheckReport {
  bool passed = true;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
};

/// The axioms: the expanded additive/order group, Ord0, Ord1, Mod, V0
/// through V5, and five comprehension instances over fixed sample
/// conditions.
std::vector<PropertyCase> axiom_suite(int k);

/// The V2 case weakened from strict to non-strict comparison; false in N
/// and used to verify that the harness actually detects counterexamples.
PropertyCase mutated_v2(int k);

/// Lemma statements: valuation and digit facts, restriction facts, the
/// least-element and induction principles for powers of k, the automaton
/// construction equivalences, the base-automata run characterizations and
/// their closed forms via the least-dominating-power graph.
std::vector<PropertyCase> lemma_suites(int k);

/// The canonical comprehension witness: the sum of all powers d' < d for
/// which phi(d', ys) holds. dvar is phi's distinguished variable.
Nat comp_witness(int k, const Nat& d, const FormulaPtr& phi, int dvar,
                 const Assignment& ys);

/// Checks every case over the exhaustive grid (components below the
/// bound, power variables over powers up to the bound) plus random_count
/// random tuples with components near k^20, all capped per case.
/// Deterministic for a fixed seed; each case derives its own generator
/// seed from its name, so results are order-independent.
CheckReport run_suite(const std::vector<PropertyCase>& cases, int k,
                      const Nat& bound, int random_count, std::uint64_t seed);

/// Language-level closure facts (product, projection, dummy tracks,
/// complement, determinization) checked by full word enumeration up to
/// max_len on seeded random automata.
CheckReport closure_suite(int k, int automata_count, int max_len,
                          std::uint64_t seed);

struct DecideEntry {
  std::string name;
  std::string text;
  int k = 2;
  bool truth = false;
};

/// Fixed sentences with recorded truth values, decided via the compiler.
const std::vector<DecideEntry>& decide_corpus();
CheckReport decide_suite();

/// Report rendering. Timing is deliberately omitted so that identical
/// seeds produce byte-identical output.
std::string report_text(const CheckReport& report);
std::string report_json(const CheckReport& report);

}  // namespace ba
