#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ba/arith.hpp"

namespace ba {

// Interned variable names. Symbol ids are stable for the process lifetime.
int intern(const std::string& name);
const std::string& symbol_name(int sym);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { Zero, Var, Succ, Plus, Vk, Literal, Scalar };

struct Term {
  TermKind kind;
  int var = -1;               // Var
  Nat value;                  // Literal value, or Scalar coefficient
  TermPtr a, b;               // Succ/Vk/Scalar use a; Plus uses a, b
  std::vector<int> free_syms; // sorted, deduplicated
  std::uint32_t id = 0;       // unique per node, never reused
};

TermPtr t_zero();
TermPtr t_var(int sym);
TermPtr t_var(const std::string& name);
TermPtr t_succ(TermPtr t);
TermPtr t_plus(TermPtr a, TermPtr b);
TermPtr t_vk(TermPtr t);
TermPtr t_lit(Nat n);
TermPtr t_scalar(Nat n, TermPtr t);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FormKind {
  Eq, Le, Lt,
  Not, And, Or, Implies,
  Exists, Forall,
  BoundedExists, BoundedForall,
};

struct Formula {
  FormKind kind;
  TermPtr lhs, rhs;           // atoms
  FormulaPtr a, b;            // Not uses a; binary connectives use a, b
  int var = -1;               // quantifiers
  TermPtr bound;              // bounded quantifiers (inclusive upper bound)
  std::vector<int> free_syms; // sorted, deduplicated
  std::uint32_t id = 0;
};

FormulaPtr f_eq(TermPtr l, TermPtr r);
FormulaPtr f_le(TermPtr l, TermPtr r);
FormulaPtr f_lt(TermPtr l, TermPtr r);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(int var, FormulaPtr body);
FormulaPtr f_exists(const std::string& var, FormulaPtr body);
FormulaPtr f_forall(int var, FormulaPtr body);
FormulaPtr f_forall(const std::string& var, FormulaPtr body);
// Bounded quantifiers range over [0, bound]; throws if var occurs in bound.
FormulaPtr f_bexists(int var, TermPtr bound, FormulaPtr body);
FormulaPtr f_bexists(const std::string& var, TermPtr bound, FormulaPtr body);
FormulaPtr f_bforall(int var, TermPtr bound, FormulaPtr body);
FormulaPtr f_bforall(const std::string& var, TermPtr bound, FormulaPtr body);

FormulaPtr f_true();   // 0 = 0
FormulaPtr f_false();  // 0 < 0
FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs);  // empty -> true
FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs);   // empty -> false

/// Ordered free-variable list: order of first free occurrence, scanning
/// bound terms before quantifier bodies.
using VarContext = std::vector<int>;
VarContext free_vars(const FormulaPtr& f);
std::vector<std::string> context_names(const VarContext& ctx);

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line), col(col) {}
};

FormulaPtr parse(const std::string& text);
std::string print(const FormulaPtr& f);
std::string print(const TermPtr& t);

/// Rewrites to the core fragment: terms over 0/S/+/V, atoms =/<=,
/// connectives !, &, and unbounded E only. Logically equivalent over N.
FormulaPtr desugar(const FormulaPtr& f);

/// Requires a desugared formula. Rewrites every atom to a simple one
/// (x=y, x=0, S(x)=y, x+y=z, V(x)=y, x<=y over variables only) by
/// introducing existentially quantified fresh variables prefixed "_t".
FormulaPtr flatten(const FormulaPtr& f);

bool is_delta0(const FormulaPtr& f);
bool is_pi1(const FormulaPtr& f);

bool struct_eq(const TermPtr& a, const TermPtr& b);
bool struct_eq(const FormulaPtr& a, const FormulaPtr& b);

}  // namespace ba
