#include "ba/compiler.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ba/base_automata.hpp"

namespace ba {

namespace {

struct Piece {
  Dfa dfa;
  VarContext ctx;
};

// Arity-0 automaton accepting every word over the empty-letter alphabet.
Dfa true_dfa(int k) {
  Dfa a;
  a.k = k;
  a.arity = 0;
  a.initial = 0;
  a.accepting = {true};
  a.next = {{0}};
  return a;
}

int index_of(const VarContext& ctx, int var) {
  auto it = std::find(ctx.begin(), ctx.end(), var);
  return it == ctx.end() ? -1 : static_cast<int>(it - ctx.begin());
}

// Merges the base automaton's track variables (repeats allowed) into a
// deduplicated context and rewrites the table accordingly.
Piece align_atom(const Dfa& base, const std::vector<int>& vars) {
  VarContext ctx;
  for (int v : vars)
    if (index_of(ctx, v) < 0) ctx.push_back(v);
  std::vector<int> positions;
  positions.reserve(vars.size());
  for (int v : vars) positions.push_back(index_of(ctx, v));
  return {apply_context(base, positions, static_cast<int>(ctx.size())),
          std::move(ctx)};
}

bool is_app(const TermPtr& t) {
  return t->kind == TermKind::Succ || t->kind == TermKind::Plus ||
         t->kind == TermKind::Vk;
}

int arg_var(const TermPtr& t) {
  if (t->kind != TermKind::Var)
    throw std::logic_error("compile: atom not in flattened form");
  return t->var;
}

Piece compile_atom(const Formula* f, int k) {
  TermPtr l = f->lhs, r = f->rhs;
  if (f->kind == FormKind::Le) {
    return align_atom(a_le(k), {arg_var(l), arg_var(r)});
  }
  if (is_app(r)) std::swap(l, r);
  switch (l->kind) {
    case TermKind::Succ:
      return align_atom(a_succ(k), {arg_var(l->a), arg_var(r)});
    case TermKind::Plus:
      return align_atom(a_plus(k), {arg_var(l->a), arg_var(l->b), arg_var(r)});
    case TermKind::Vk:
      return align_atom(a_v(k), {arg_var(l->a), arg_var(r)});
    case TermKind::Var:
      if (r->kind == TermKind::Var)
        return align_atom(a_eq(k), {l->var, r->var});
      if (r->kind == TermKind::Zero) return align_atom(a_zero(k), {l->var});
      break;
    case TermKind::Zero:
      if (r->kind == TermKind::Zero) return {true_dfa(k), {}};
      if (r->kind == TermKind::Var) return align_atom(a_zero(k), {r->var});
      break;
    default:
      break;
  }
  throw std::logic_error("compile: atom not in flattened form");
}

// Rewrites the automaton to read its context from `wider`, a superset
// context. Identity when the contexts already coincide.
Dfa widen(const Dfa& a, const VarContext& ctx, const VarContext& wider) {
  if (ctx == wider) return a;
  std::vector<int> positions;
  positions.reserve(ctx.size());
  for (int v : ctx) {
    int pos = index_of(wider, v);
    if (pos < 0) throw std::logic_error("compile: context alignment failed");
    positions.push_back(pos);
  }
  return apply_context(a, positions, static_cast<int>(wider.size()));
}

Piece compile_rec(const FormulaPtr& f, int k);

void collect_conjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind == FormKind::And) {
    collect_conjuncts(f->a, out);
    collect_conjuncts(f->b, out);
  } else {
    out.push_back(f);
  }
}

Piece conj_product(std::vector<Piece> pieces, int k) {
  if (pieces.empty()) return {true_dfa(k), {}};
  Piece acc = std::move(pieces.front());
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    VarContext ctx = acc.ctx;
    for (int v : pieces[i].ctx)
      if (index_of(ctx, v) < 0) ctx.push_back(v);
    Dfa da = widen(acc.dfa, acc.ctx, ctx);
    Dfa db = widen(pieces[i].dfa, pieces[i].ctx, ctx);
    acc = {product(da, db), std::move(ctx)};
  }
  return acc;
}

Piece project_var(Piece p, int var) {
  int pos = index_of(p.ctx, var);
  if (pos < 0) return p;  // vacuous quantifier
  int m = static_cast<int>(p.ctx.size());
  std::vector<int> perm(m);
  for (int t = 0; t < m; ++t)
    perm[t] = t < pos ? t : (t == pos ? m - 1 : t - 1);
  Dfa moved = reorder_tracks(p.dfa, perm);
  p.dfa = zero_saturate(determinize(project(moved)));
  p.ctx.erase(p.ctx.begin() + pos);
  return p;
}

// Eliminates a block of existential variables over a conjunction by
// repeatedly merging only the conjunct automata that mention the chosen
// variable and projecting it right away. Keeps intermediate arities small
// where a single global product would be exponential in the number of
// flattening temporaries.
Piece eliminate_block(const std::vector<int>& block,
                      const std::vector<FormulaPtr>& conjuncts, int k) {
  std::vector<Piece> pieces;
  pieces.reserve(conjuncts.size());
  for (const FormulaPtr& c : conjuncts) pieces.push_back(compile_rec(c, k));
  std::vector<int> pending = block;
  while (!pending.empty()) {
    // pick the variable whose merged context would be smallest
    std::size_t best = 0, best_size = ~std::size_t(0);
    for (std::size_t i = 0; i < pending.size(); ++i) {
      VarContext u;
      for (const Piece& p : pieces)
        if (index_of(p.ctx, pending[i]) >= 0)
          for (int v : p.ctx)
            if (index_of(u, v) < 0) u.push_back(v);
      if (u.size() < best_size) {
        best = i;
        best_size = u.size();
      }
    }
    int var = pending[best];
    pending.erase(pending.begin() + best);
    std::vector<Piece> group, rest;
    for (Piece& p : pieces)
      (index_of(p.ctx, var) >= 0 ? group : rest).push_back(std::move(p));
    if (group.empty()) continue;
    rest.push_back(project_var(conj_product(std::move(group), k), var));
    pieces = std::move(rest);
  }
  return conj_product(std::move(pieces), k);
}

Piece compile_rec(const FormulaPtr& f, int k) {
  switch (f->kind) {
    case FormKind::Eq:
    case FormKind::Le:
      return compile_atom(f.get(), k);
    case FormKind::Not: {
      Piece p = compile_rec(f->a, k);
      p.dfa = complement(p.dfa);
      return p;
    }
    case FormKind::And: {
      Piece pa = compile_rec(f->a, k);
      Piece pb = compile_rec(f->b, k);
      VarContext ctx = pa.ctx;
      for (int v : pb.ctx)
        if (index_of(ctx, v) < 0) ctx.push_back(v);
      Dfa da = widen(pa.dfa, pa.ctx, ctx);
      Dfa db = widen(pb.dfa, pb.ctx, ctx);
      return {product(da, db), std::move(ctx)};
    }
    case FormKind::Exists: {
      std::vector<int> block;
      FormulaPtr body = f;
      while (body->kind == FormKind::Exists) {
        block.push_back(body->var);
        body = body->a;
      }
      std::vector<FormulaPtr> conjuncts;
      collect_conjuncts(body, conjuncts);
      return eliminate_block(block, conjuncts, k);
    }
    default:
      throw std::logic_error("compile: formula not in core form");
  }
}

}  // namespace

CompiledFormula compile(const FormulaPtr& f, int k) {
  check_base(k);
  VarContext target = free_vars(f);
  Piece p = compile_rec(flatten(desugar(f)), k);
  // Simplification during flattening can drop variables (for example a
  // trivially true atom), so realign to the formula's own context.
  Dfa dfa = widen(p.dfa, p.ctx, target);
  return {std::move(dfa), std::move(target), k};
}

bool decide(const FormulaPtr& sentence, int k) {
  VarContext open = free_vars(sentence);
  if (!open.empty()) {
    std::string names;
    for (int sym : open) names += " " + symbol_name(sym);
    throw std::invalid_argument("decide: formula has free variables:" + names);
  }
  CompiledFormula c = compile(sentence, k);
  Dfa sat = zero_saturate(c.dfa);
  return sat.accepting[sat.initial];
}

namespace {

// States from which an accepted word with a nonzero final letter exists.
std::vector<bool> canonical_live(const Dfa& a) {
  int n = a.num_states();
  int letters = static_cast<int>(a.num_letters());
  std::vector<bool> live(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (live[s]) continue;
      for (int c = 0; c < letters && !live[s]; ++c)
        if ((c != 0 && a.accepting[a.next[s][c]]) || live[a.next[s][c]])
          live[s] = changed = true;
    }
  }
  return live;
}

void enumerate_level(const Dfa& a, int L,
                     const std::vector<std::vector<bool>>& ok, int state,
                     int rem, std::vector<int>& codes,
                     std::vector<std::vector<Nat>>& out) {
  if (rem == 0) {
    std::vector<Nat> tuple(a.arity);
    for (int i = 0; i < a.arity; ++i) {
      std::vector<int> digits(L);
      for (int j = 0; j < L; ++j)
        digits[j] = code_letter(a.k, a.arity, codes[j]).digits[i];
      tuple[i] = from_expansion(a.k, digits);
    }
    out.push_back(std::move(tuple));
    return;
  }
  int letters = static_cast<int>(a.num_letters());
  for (int c = rem == 1 ? 1 : 0; c < letters; ++c) {
    int t = a.next[state][c];
    if (!ok[rem - 1][t]) continue;
    codes.push_back(c);
    enumerate_level(a, L, ok, t, rem - 1, codes, out);
    codes.pop_back();
  }
}

}  // namespace

std::vector<Assignment> solve(const FormulaPtr& f, int k, std::size_t limit) {
  CompiledFormula c = compile(f, k);
  const Dfa& a = c.dfa;
  std::vector<Assignment> out;
  if (limit == 0) return out;
  if (a.arity == 0) {
    Dfa sat = zero_saturate(a);
    if (sat.accepting[sat.initial]) out.push_back({});
    return out;
  }
  std::vector<bool> live = canonical_live(a);
  int letters = static_cast<int>(a.num_letters());
  std::vector<bool> frontier(a.num_states(), false);
  frontier[a.initial] = true;
  for (int L = 0; out.size() < limit; ++L) {
    std::vector<std::vector<Nat>> tuples;
    if (L == 0) {
      if (a.accepting[a.initial])
        tuples.push_back(std::vector<Nat>(a.arity, Nat(0)));
    } else {
      // ok[r][s]: a length-r suffix from s ends accepting with its last
      // letter nonzero.
      std::vector<std::vector<bool>> ok(L, std::vector<bool>(a.num_states()));
      for (int s = 0; s < a.num_states(); ++s) {
        bool hit = false;
        for (int cd = 1; cd < letters && !hit; ++cd)
          hit = a.accepting[a.next[s][cd]];
        ok[0][s] = hit;  // remaining = 1 when consulted with index rem-1
      }
      for (int r = 1; r < L; ++r)
        for (int s = 0; s < a.num_states(); ++s) {
          bool hit = false;
          for (int cd = 0; cd < letters && !hit; ++cd)
            hit = ok[r - 1][a.next[s][cd]];
          ok[r][s] = hit;
        }
      // shift: ok[rem-1] answers "suffix of length rem", so prepend the
      // accepting-state row for rem = 0 lookups inside the recursion
      std::vector<std::vector<bool>> table;
      table.push_back(
          std::vector<bool>(a.accepting.begin(), a.accepting.end()));
      for (auto& row : ok) table.push_back(std::move(row));
      std::vector<int> codes;
      enumerate_level(a, L, table, a.initial, L, codes, tuples);
    }
    std::sort(tuples.begin(), tuples.end());
    for (const auto& t : tuples) {
      if (out.size() >= limit) break;
      Assignment alpha;
      for (int i = 0; i < a.arity; ++i)
        alpha[symbol_name(c.context[i])] = t[i];
      out.push_back(std::move(alpha));
    }
    // longer canonical words exist iff a state reached after exactly L
    // steps still has an accepted continuation ending in a nonzero letter
    bool more = false;
    for (int s = 0; s < a.num_states(); ++s)
      if (frontier[s] && live[s]) more = true;
    if (!more) break;
    std::vector<bool> nxt(a.num_states(), false);
    for (int s = 0; s < a.num_states(); ++s)
      if (frontier[s])
        for (int cd = 0; cd < letters; ++cd) nxt[a.next[s][cd]] = true;
    frontier = std::move(nxt);
  }
  return out;
}

Nat count(const FormulaPtr& f, int k, int L) {
  CompiledFormula c = compile(f, k);
  return count_below(c.dfa, L);
}

}  // namespace ba
