#include "ba/oracle.hpp"

#include <algorithm>

namespace ba {

namespace {

Tri neg(Tri t) { return static_cast<Tri>(-static_cast<std::int8_t>(t)); }

Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }

constexpr std::size_t kMemoSize = std::size_t(1) << 20;

bool is_exists(FormKind kind) {
  return kind == FormKind::Exists || kind == FormKind::BoundedExists;
}

// V(v) = v as a conjunct licenses enumerating only 0 and the powers of k.
bool is_power_guard(const Formula* f, int var) {
  if (f->kind != FormKind::Eq) return false;
  const Term* l = f->lhs.get();
  const Term* r = f->rhs.get();
  if (l->kind != TermKind::Vk) std::swap(l, r);
  return l->kind == TermKind::Vk && l->a->kind == TermKind::Var &&
         l->a->var == var && r->kind == TermKind::Var && r->var == var;
}

bool conj_tree_has_guard(const Formula* f, int var) {
  if (f->kind == FormKind::And)
    return conj_tree_has_guard(f->a.get(), var) ||
           conj_tree_has_guard(f->b.get(), var);
  return is_power_guard(f, var);
}

}  // namespace

Evaluator::Evaluator(int k, std::uint64_t step_limit)
    : k_(k), step_limit_(step_limit) {
  check_base(k);
}

void Evaluator::clear_env() { env_.assign(env_.size(), nullptr); }

void Evaluator::set_search_bound(const Nat* bound) {
  bool same = (bound == search_bound_) ||
              (bound && search_bound_ && *bound == *search_bound_);
  if (!same) memo_.clear();
  search_bound_ = bound;
}

void Evaluator::set_var(int sym, const Nat* value) {
  if (sym < 0) throw std::invalid_argument("set_var: bad symbol");
  if (env_.size() <= static_cast<std::size_t>(sym)) env_.resize(sym + 1);
  env_[sym] = value;
}

const Nat* Evaluator::lookup(int sym) const {
  if (static_cast<std::size_t>(sym) >= env_.size()) return nullptr;
  return env_[sym];
}

bool Evaluator::term_eval(const TermPtr& t, Nat& out) const {
  switch (t->kind) {
    case TermKind::Zero:
      out = 0;
      return true;
    case TermKind::Literal:
      out = t->value;
      return true;
    case TermKind::Var: {
      const Nat* v = lookup(t->var);
      if (!v) return false;
      out = *v;
      return true;
    }
    case TermKind::Succ:
      if (!term_eval(t->a, out)) return false;
      ++out;
      return true;
    case TermKind::Plus: {
      Nat rhs;
      if (!term_eval(t->a, out) || !term_eval(t->b, rhs)) return false;
      out += rhs;
      return true;
    }
    case TermKind::Vk:
      if (!term_eval(t->a, out)) return false;
      out = v_k(k_, out);
      return true;
    case TermKind::Scalar:
      if (!term_eval(t->a, out)) return false;
      out *= t->value;
      return true;
  }
  return false;
}

Tri Evaluator::eval3(const FormulaPtr& f) {
  steps_ = 0;
  return eval_node(f.get());
}

bool Evaluator::eval(const FormulaPtr& f) {
  Tri r = eval3(f);
  if (r == Tri::Unknown)
    throw std::invalid_argument("eval: unbound free variable");
  return r == Tri::True;
}

Tri Evaluator::eval_node(const Formula* f) {
  switch (f->kind) {
    case FormKind::Eq:
    case FormKind::Le:
    case FormKind::Lt: {
      Nat l, r;
      if (!term_eval(f->lhs, l) || !term_eval(f->rhs, r)) return Tri::Unknown;
      switch (f->kind) {
        case FormKind::Eq: return tri_of(l == r);
        case FormKind::Le: return tri_of(l <= r);
        default: return tri_of(l < r);
      }
    }
    case FormKind::Not:
      return neg(eval_node(f->a.get()));
    case FormKind::And: {
      Tri a = eval_node(f->a.get());
      if (a == Tri::False) return Tri::False;
      Tri b = eval_node(f->b.get());
      if (b == Tri::False) return Tri::False;
      return (a == Tri::True && b == Tri::True) ? Tri::True : Tri::Unknown;
    }
    case FormKind::Or: {
      Tri a = eval_node(f->a.get());
      if (a == Tri::True) return Tri::True;
      Tri b = eval_node(f->b.get());
      if (b == Tri::True) return Tri::True;
      return (a == Tri::False && b == Tri::False) ? Tri::False : Tri::Unknown;
    }
    case FormKind::Implies: {
      Tri a = eval_node(f->a.get());
      if (a == Tri::False) return Tri::True;
      Tri b = eval_node(f->b.get());
      if (b == Tri::True) return Tri::True;
      return (a == Tri::True && b == Tri::False) ? Tri::False : Tri::Unknown;
    }
    case FormKind::Exists:
    case FormKind::Forall:
    case FormKind::BoundedExists:
    case FormKind::BoundedForall:
      return eval_quant(f);
  }
  return Tri::Unknown;
}

Tri Evaluator::eval_quant(const Formula* f) {
  bool existential = is_exists(f->kind);
  bool bounded =
      f->kind == FormKind::BoundedExists || f->kind == FormKind::BoundedForall;
  Nat bound;
  if (bounded) {
    if (!term_eval(f->bound, bound)) return Tri::Unknown;
  } else {
    if (!search_bound_)
      throw std::invalid_argument(
          "eval: unbounded quantifier without a search bound");
    bound = *search_bound_;
  }

  MemoEntry key;
  bool memoizable = bounded && memo_key(f, key);
  if (memoizable)
    if (Tri* hit = memo_find(key)) return *hit;

  const Formula* body = f->a.get();
  int var = f->var;
  if (env_.size() <= static_cast<std::size_t>(var)) env_.resize(var + 1);
  const Nat* saved = env_[var];

  bool unknown_other = false;
  for (int sym : body->free_syms)
    if (sym != var && !lookup(sym)) {
      unknown_other = true;
      break;
    }

  Tri result;
  if (power_guarded(body, existential, var)) {
    std::vector<Nat> candidates = {Nat(0)};
    for (Nat p = 1; p <= bound; p *= k_) candidates.push_back(p);
    result = try_candidates(f, existential, candidates, bound);
  } else if (unknown_other && bound > 32) {
    // Any definite value with the variable itself unknown is uniform in
    // it, so it is the quantifier's value.
    set_var(var, nullptr);
    result = eval_node(body);
  } else {
    bool solved = false;
    if (bound > 16) {
      Pins p = pins(body, var, existential);
      if (p.complete) {
        // Existential: the body is false off the candidate list.
        // Universal: the body is true off the list of falsity pins.
        result = try_candidates(f, existential, p.candidates, bound);
        solved = true;
      }
    }
    if (!solved && bound > 16 && !unknown_other) {
      set_var(var, nullptr);
      Tri pre = eval_node(body);
      env_[var] = saved;
      if (pre != Tri::Unknown) {
        if (memoizable) memo_store(key, pre);
        return pre;
      }
    }
    if (!solved) result = iterate(f, existential, bound);
  }
  env_[var] = saved;
  if (memoizable) memo_store(key, result);
  return result;
}

Tri Evaluator::iterate(const Formula* f, bool existential, const Nat& bound) {
  if (bound > step_limit_ - std::min<std::uint64_t>(steps_, step_limit_))
    throw EvalLimit();
  const Formula* body = f->a.get();
  int var = f->var;
  bool saw_unknown = false;
  Nat v = 0;
  set_var(var, &v);
  for (; v <= bound; ++v) {
    if (++steps_ > step_limit_) {
      env_[var] = nullptr;
      throw EvalLimit();
    }
    Tri r = eval_node(body);
    if (r == (existential ? Tri::True : Tri::False)) {
      env_[var] = nullptr;
      return r;
    }
    if (r == Tri::Unknown) saw_unknown = true;
  }
  env_[var] = nullptr;
  if (saw_unknown) return Tri::Unknown;
  return existential ? Tri::False : Tri::True;
}

Tri Evaluator::try_candidates(const Formula* f, bool existential,
                              const std::vector<Nat>& candidates,
                              const Nat& bound) {
  const Formula* body = f->a.get();
  int var = f->var;
  bool saw_unknown = false;
  Nat v;
  for (const Nat& c : candidates) {
    if (c > bound) continue;
    if (++steps_ > step_limit_) throw EvalLimit();
    v = c;
    set_var(var, &v);
    Tri r = eval_node(body);
    env_[var] = nullptr;
    if (r == (existential ? Tri::True : Tri::False)) return r;
    if (r == Tri::Unknown) saw_unknown = true;
  }
  if (saw_unknown) return Tri::Unknown;
  return existential ? Tri::False : Tri::True;
}

bool Evaluator::power_guarded(const Formula* body, bool existential,
                              int var) const {
  if (existential) return conj_tree_has_guard(body, var);
  // Universal: values failing the guard satisfy the body vacuously.
  if (body->kind == FormKind::Implies)
    return conj_tree_has_guard(body->a.get(), var);
  if (body->kind == FormKind::Or) {
    if (body->a->kind == FormKind::Not &&
        conj_tree_has_guard(body->a->a.get(), var))
      return true;
    if (body->b->kind == FormKind::Not &&
        conj_tree_has_guard(body->b->a.get(), var))
      return true;
  }
  return false;
}

Evaluator::Lin Evaluator::linearize(const TermPtr& t, int var) const {
  Lin out;
  switch (t->kind) {
    case TermKind::Zero:
      out = {true, 0, 0};
      break;
    case TermKind::Literal:
      out = {true, 0, t->value};
      break;
    case TermKind::Var:
      if (t->var == var) {
        out = {true, 1, 0};
      } else if (const Nat* v = lookup(t->var)) {
        out = {true, 0, *v};
      }
      break;
    case TermKind::Succ: {
      out = linearize(t->a, var);
      if (out.ok) ++out.cst;
      break;
    }
    case TermKind::Plus: {
      Lin a = linearize(t->a, var);
      Lin b = linearize(t->b, var);
      if (a.ok && b.ok) out = {true, a.coeff + b.coeff, a.cst + b.cst};
      break;
    }
    case TermKind::Scalar: {
      Lin a = linearize(t->a, var);
      if (a.ok) out = {true, a.coeff * t->value, a.cst * t->value};
      break;
    }
    case TermKind::Vk: {
      // nonlinear in var; constant only if var does not occur
      if (std::binary_search(t->free_syms.begin(), t->free_syms.end(), var))
        break;
      Nat value;
      if (term_eval(t, value)) out = {true, 0, value};
      break;
    }
  }
  return out;
}

Evaluator::Pins Evaluator::pins(const Formula* f, int var, bool truth) const {
  if (!std::binary_search(f->free_syms.begin(), f->free_syms.end(), var))
    return {};
  switch (f->kind) {
    case FormKind::Eq: {
      if (!truth) return {};
      Lin l = linearize(f->lhs, var);
      Lin r = linearize(f->rhs, var);
      if (!l.ok || !r.ok) return {};
      if (l.coeff == r.coeff) {
        if (l.cst == r.cst) return {};           // independent of var
        return {true, {}};                       // unsatisfiable
      }
      if (l.coeff < r.coeff) std::swap(l, r);
      Nat diff = l.coeff - r.coeff;
      if (r.cst < l.cst) return {true, {}};
      Nat num = r.cst - l.cst;
      if (num % diff != 0) return {true, {}};
      return {true, {num / diff}};
    }
    case FormKind::Le:
    case FormKind::Lt:
      return {};
    case FormKind::Not:
      return pins(f->a.get(), var, !truth);
    case FormKind::And:
    case FormKind::Or: {
      bool conjunctive = (f->kind == FormKind::And) == truth;
      Pins a = pins(f->a.get(), var, truth);
      Pins b = pins(f->b.get(), var, truth);
      if (conjunctive) {
        // membership in either list is necessary; take the smaller
        if (a.complete && b.complete)
          return a.candidates.size() <= b.candidates.size() ? a : b;
        if (a.complete) return a;
        return b;
      }
      if (!a.complete || !b.complete) return {};
      a.candidates.insert(a.candidates.end(), b.candidates.begin(),
                          b.candidates.end());
      return a;
    }
    case FormKind::Implies: {
      Pins a = pins(f->a.get(), var, !truth);
      Pins b = pins(f->b.get(), var, truth);
      if (truth) {
        // not-antecedent or consequent: need both
        if (!a.complete || !b.complete) return {};
        a.candidates.insert(a.candidates.end(), b.candidates.begin(),
                            b.candidates.end());
        return a;
      }
      if (a.complete && b.complete)
        return a.candidates.size() <= b.candidates.size() ? a : b;
      if (a.complete) return a;
      return b;
    }
    default:
      return {};
  }
}

bool Evaluator::memo_key(const Formula* f, MemoEntry& key) const {
  if (f->free_syms.size() > 4) return false;
  key.id = f->id;
  key.n = static_cast<std::uint8_t>(f->free_syms.size());
  for (std::size_t i = 0; i < f->free_syms.size(); ++i) {
    const Nat* v = lookup(f->free_syms[i]);
    if (!v) {
      key.slot[i] = 0;
    } else {
      if (*v >= (Nat(1) << 63)) return false;
      key.slot[i] = static_cast<std::uint64_t>(*v) + 1;
    }
  }
  return true;
}

namespace {

std::size_t memo_hash(std::uint32_t id, const std::uint64_t* slot) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(id);
  for (int i = 0; i < 4; ++i) mix(slot[i]);
  return static_cast<std::size_t>(h);
}

}  // namespace

Tri* Evaluator::memo_find(const MemoEntry& key) {
  if (memo_.empty()) return nullptr;
  MemoEntry& e =
      memo_[memo_hash(key.id, key.slot) & (kMemoSize - 1)];
  if (e.id == key.id && e.n == key.n && std::equal(e.slot, e.slot + 4,
                                                   key.slot))
    return &e.val;
  return nullptr;
}

void Evaluator::memo_store(const MemoEntry& key, Tri val) {
  // The table costs tens of megabytes; cheap evaluations skip it.
  if (memo_.empty()) {
    if (steps_ < 4096) return;
    memo_.resize(kMemoSize);
  }
  MemoEntry& e =
      memo_[memo_hash(key.id, key.slot) & (kMemoSize - 1)];
  e = key;
  e.val = val;
}

bool eval_delta0(const FormulaPtr& f, const Assignment& alpha, int k) {
  if (!is_delta0(f))
    throw std::invalid_argument("eval_delta0: formula is not Delta0");
  Evaluator ev(k);
  std::vector<Nat> storage;
  storage.reserve(alpha.size());
  for (const auto& [name, value] : alpha) storage.push_back(value);
  std::size_t i = 0;
  for (const auto& [name, value] : alpha) ev.set_var(intern(name), &storage[i++]);
  for (int sym : free_vars(f))
    if (!alpha.count(symbol_name(sym)))
      throw std::invalid_argument("eval_delta0: missing assignment for " +
                                  symbol_name(sym));
  return ev.eval(f);
}

bool eval_bounded(const FormulaPtr& f, const Assignment& alpha, int k,
                  const Nat& search_bound) {
  Evaluator ev(k);
  std::vector<Nat> storage;
  storage.reserve(alpha.size());
  for (const auto& [name, value] : alpha) storage.push_back(value);
  std::size_t i = 0;
  for (const auto& [name, value] : alpha) ev.set_var(intern(name), &storage[i++]);
  for (int sym : free_vars(f))
    if (!alpha.count(symbol_name(sym)))
      throw std::invalid_argument("eval_bounded: missing assignment for " +
                                  symbol_name(sym));
  ev.set_search_bound(&search_bound);
  return ev.eval(f);
}

}  // namespace ba
