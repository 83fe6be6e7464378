#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ba/syntax.hpp"

namespace ba {

using Assignment = std::map<std::string, Nat>;

/// Raised when an evaluation exceeds its quantifier-iteration budget.
struct EvalLimit : std::runtime_error {
  EvalLimit() : std::runtime_error("evaluation iteration limit exceeded") {}
};

/// Three-valued truth for evaluation under partial assignments. Definite
/// results are monotone: they hold for every completion of the assignment.
enum class Tri : std::int8_t { False = -1, Unknown = 0, True = 1 };

/// Semantic evaluation over N. Exact for Delta0 formulas; formulas with
/// unbounded quantifiers need a caller-certified search bound.
///
/// Repeated evaluations reuse an internal memo table keyed by quantifier
/// node and the values of its free variables, so a long-lived Evaluator
/// amortizes work across a sample grid.
class Evaluator {
 public:
  explicit Evaluator(int k, std::uint64_t step_limit = 1ull << 26);

  int base() const { return k_; }

  /// Unbinds every variable.
  void clear_env();
  /// Binds sym to *value (not copied; must outlive the evaluation), or
  /// unbinds it when value is null.
  void set_var(int sym, const Nat* value);

  /// Range [0, bound] substituted for unbounded quantifiers; null (the
  /// default) makes them an error. Soundness of a bound is the caller's
  /// obligation. Changing the bound value drops the memo table.
  void set_search_bound(const Nat* bound);

  /// Three-valued evaluation under the current partial assignment.
  Tri eval3(const FormulaPtr& f);

  /// Two-valued evaluation; throws std::invalid_argument if a free
  /// variable is unbound.
  bool eval(const FormulaPtr& f);

 private:
  struct Lin {
    bool ok = false;
    Nat coeff;  // of the pinned variable
    Nat cst;
  };
  struct Pins {
    bool complete = false;
    std::vector<Nat> candidates;
  };
  struct MemoEntry {
    std::uint32_t id = 0;
    std::uint8_t n = 0;
    std::uint64_t slot[4] = {0, 0, 0, 0};
    Tri val = Tri::Unknown;
  };

  const Nat* lookup(int sym) const;
  bool term_eval(const TermPtr& t, Nat& out) const;
  Tri eval_node(const Formula* f);
  Tri eval_quant(const Formula* f);
  Tri iterate(const Formula* f, bool existential, const Nat& bound);
  Tri try_candidates(const Formula* f, bool existential,
                     const std::vector<Nat>& candidates, const Nat& bound);
  bool power_guarded(const Formula* body, bool existential, int var) const;
  Lin linearize(const TermPtr& t, int var) const;
  Pins pins(const Formula* f, int var, bool truth) const;

  bool memo_key(const Formula* f, MemoEntry& key) const;
  Tri* memo_find(const MemoEntry& key);
  void memo_store(const MemoEntry& key, Tri val);

  int k_;
  std::uint64_t step_limit_;
  std::uint64_t steps_ = 0;
  const Nat* search_bound_ = nullptr;
  std::vector<const Nat*> env_;
  std::vector<MemoEntry> memo_;
};

/// One-shot exact evaluation of a Delta0 formula. Throws on non-Delta0
/// input or a missing assignment.
bool eval_delta0(const FormulaPtr& f, const Assignment& alpha, int k);

/// One-shot evaluation with unbounded quantifiers searched over
/// [0, search_bound]. Sound only when the caller certifies the bound.
bool eval_bounded(const FormulaPtr& f, const Assignment& alpha, int k,
                  const Nat& search_bound);

}  // namespace ba
