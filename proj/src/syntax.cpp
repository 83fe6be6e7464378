#include "ba/syntax.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

namespace ba {

namespace {

std::vector<std::string>& symbol_table() {
  static std::vector<std::string> table;
  return table;
}

std::unordered_map<std::string, int>& symbol_index() {
  static std::unordered_map<std::string, int> index;
  return index;
}

std::atomic<std::uint32_t> next_node_id{1};

std::vector<int> merge_syms(const std::vector<int>& a,
                            const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<int> remove_sym(const std::vector<int>& a, int sym) {
  std::vector<int> out;
  out.reserve(a.size());
  for (int s : a)
    if (s != sym) out.push_back(s);
  return out;
}

TermPtr make_term(Term t) {
  t.id = next_node_id.fetch_add(1, std::memory_order_relaxed);
  return std::make_shared<const Term>(std::move(t));
}

FormulaPtr make_formula(Formula f) {
  f.id = next_node_id.fetch_add(1, std::memory_order_relaxed);
  return std::make_shared<const Formula>(std::move(f));
}

}  // namespace

int intern(const std::string& name) {
  auto& idx = symbol_index();
  auto it = idx.find(name);
  if (it != idx.end()) return it->second;
  int sym = static_cast<int>(symbol_table().size());
  symbol_table().push_back(name);
  idx.emplace(name, sym);
  return sym;
}

const std::string& symbol_name(int sym) { return symbol_table().at(sym); }

TermPtr t_zero() {
  return make_term({.kind = TermKind::Zero});
}

TermPtr t_var(int sym) {
  Term t{.kind = TermKind::Var, .var = sym};
  t.free_syms = {sym};
  return make_term(std::move(t));
}

TermPtr t_var(const std::string& name) { return t_var(intern(name)); }

TermPtr t_succ(TermPtr t) {
  Term n{.kind = TermKind::Succ, .a = std::move(t)};
  n.free_syms = n.a->free_syms;
  return make_term(std::move(n));
}

TermPtr t_plus(TermPtr a, TermPtr b) {
  Term n{.kind = TermKind::Plus, .a = std::move(a), .b = std::move(b)};
  n.free_syms = merge_syms(n.a->free_syms, n.b->free_syms);
  return make_term(std::move(n));
}

TermPtr t_vk(TermPtr t) {
  Term n{.kind = TermKind::Vk, .a = std::move(t)};
  n.free_syms = n.a->free_syms;
  return make_term(std::move(n));
}

TermPtr t_lit(Nat n) {
  if (n < 0) throw std::invalid_argument("t_lit: negative literal");
  return make_term({.kind = TermKind::Literal, .value = std::move(n)});
}

TermPtr t_scalar(Nat n, TermPtr t) {
  if (n < 0) throw std::invalid_argument("t_scalar: negative coefficient");
  Term node{.kind = TermKind::Scalar, .value = std::move(n), .a = std::move(t)};
  node.free_syms = node.a->free_syms;
  return make_term(std::move(node));
}

namespace {

FormulaPtr make_atom(FormKind kind, TermPtr l, TermPtr r) {
  Formula f{.kind = kind, .lhs = std::move(l), .rhs = std::move(r)};
  f.free_syms = merge_syms(f.lhs->free_syms, f.rhs->free_syms);
  return make_formula(std::move(f));
}

FormulaPtr make_binary(FormKind kind, FormulaPtr a, FormulaPtr b) {
  Formula f{.kind = kind, .a = std::move(a), .b = std::move(b)};
  f.free_syms = merge_syms(f.a->free_syms, f.b->free_syms);
  return make_formula(std::move(f));
}

FormulaPtr make_quant(FormKind kind, int var, TermPtr bound, FormulaPtr body) {
  if (bound) {
    if (std::binary_search(bound->free_syms.begin(), bound->free_syms.end(),
                           var))
      throw std::invalid_argument("bounded quantifier: variable '" +
                                  symbol_name(var) +
                                  "' occurs in its own bound");
  }
  Formula f{.kind = kind, .a = std::move(body), .var = var,
            .bound = std::move(bound)};
  f.free_syms = remove_sym(f.a->free_syms, var);
  if (f.bound) f.free_syms = merge_syms(f.free_syms, f.bound->free_syms);
  return make_formula(std::move(f));
}

}  // namespace

FormulaPtr f_eq(TermPtr l, TermPtr r) {
  return make_atom(FormKind::Eq, std::move(l), std::move(r));
}
FormulaPtr f_le(TermPtr l, TermPtr r) {
  return make_atom(FormKind::Le, std::move(l), std::move(r));
}
FormulaPtr f_lt(TermPtr l, TermPtr r) {
  return make_atom(FormKind::Lt, std::move(l), std::move(r));
}

FormulaPtr f_not(FormulaPtr a) {
  Formula f{.kind = FormKind::Not, .a = std::move(a)};
  f.free_syms = f.a->free_syms;
  return make_formula(std::move(f));
}

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return make_binary(FormKind::And, std::move(a), std::move(b));
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return make_binary(FormKind::Or, std::move(a), std::move(b));
}
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return make_binary(FormKind::Implies, std::move(a), std::move(b));
}
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) {
  return f_and(f_implies(a, b), f_implies(b, a));
}

FormulaPtr f_exists(int var, FormulaPtr body) {
  return make_quant(FormKind::Exists, var, nullptr, std::move(body));
}
FormulaPtr f_exists(const std::string& var, FormulaPtr body) {
  return f_exists(intern(var), std::move(body));
}
FormulaPtr f_forall(int var, FormulaPtr body) {
  return make_quant(FormKind::Forall, var, nullptr, std::move(body));
}
FormulaPtr f_forall(const std::string& var, FormulaPtr body) {
  return f_forall(intern(var), std::move(body));
}
FormulaPtr f_bexists(int var, TermPtr bound, FormulaPtr body) {
  return make_quant(FormKind::BoundedExists, var, std::move(bound),
                    std::move(body));
}
FormulaPtr f_bexists(const std::string& var, TermPtr bound, FormulaPtr body) {
  return f_bexists(intern(var), std::move(bound), std::move(body));
}
FormulaPtr f_bforall(int var, TermPtr bound, FormulaPtr body) {
  return make_quant(FormKind::BoundedForall, var, std::move(bound),
                    std::move(body));
}
FormulaPtr f_bforall(const std::string& var, TermPtr bound, FormulaPtr body) {
  return f_bforall(intern(var), std::move(bound), std::move(body));
}

FormulaPtr f_true() { return f_eq(t_zero(), t_zero()); }
FormulaPtr f_false() { return f_lt(t_zero(), t_zero()); }

FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return f_true();
  FormulaPtr out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) out = f_and(out, fs[i]);
  return out;
}

FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return f_false();
  FormulaPtr out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) out = f_or(out, fs[i]);
  return out;
}

namespace {

void scan_term(const TermPtr& t, const std::vector<int>& bound,
               VarContext& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (std::find(bound.begin(), bound.end(), t->var) == bound.end() &&
          std::find(out.begin(), out.end(), t->var) == out.end())
        out.push_back(t->var);
      break;
    case TermKind::Succ:
    case TermKind::Vk:
    case TermKind::Scalar:
      scan_term(t->a, bound, out);
      break;
    case TermKind::Plus:
      scan_term(t->a, bound, out);
      scan_term(t->b, bound, out);
      break;
    default:
      break;
  }
}

void scan_formula(const FormulaPtr& f, std::vector<int>& bound,
                  VarContext& out) {
  switch (f->kind) {
    case FormKind::Eq:
    case FormKind::Le:
    case FormKind::Lt:
      scan_term(f->lhs, bound, out);
      scan_term(f->rhs, bound, out);
      break;
    case FormKind::Not:
      scan_formula(f->a, bound, out);
      break;
    case FormKind::And:
    case FormKind::Or:
    case FormKind::Implies:
      scan_formula(f->a, bound, out);
      scan_formula(f->b, bound, out);
      break;
    case FormKind::Exists:
    case FormKind::Forall:
    case FormKind::BoundedExists:
    case FormKind::BoundedForall:
      if (f->bound) scan_term(f->bound, bound, out);
      bound.push_back(f->var);
      scan_formula(f->a, bound, out);
      bound.pop_back();
      break;
  }
}

}  // namespace

VarContext free_vars(const FormulaPtr& f) {
  VarContext out;
  std::vector<int> bound;
  scan_formula(f, bound, out);
  return out;
}

std::vector<std::string> context_names(const VarContext& ctx) {
  std::vector<std::string> names;
  names.reserve(ctx.size());
  for (int s : ctx) names.push_back(symbol_name(s));
  return names;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
  Ident, Nat, KwS, KwV, KwE, KwA,
  LParen, RParen, Plus, Star, Eq, Le, Lt, Arrow, IffArrow, Bar, Amp, Bang, Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Nat value;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", 0, line, col};
    char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
        name.push_back(advance());
      return {Tok::Ident, name, 0, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits.push_back(advance());
      return {Tok::Nat, digits, Nat(digits), line, col};
    }
    switch (c) {
      case 'S': advance(); return {Tok::KwS, "S", 0, line, col};
      case 'V': advance(); return {Tok::KwV, "V", 0, line, col};
      case 'E': advance(); return {Tok::KwE, "E", 0, line, col};
      case 'A': advance(); return {Tok::KwA, "A", 0, line, col};
      case '(': advance(); return {Tok::LParen, "(", 0, line, col};
      case ')': advance(); return {Tok::RParen, ")", 0, line, col};
      case '+': advance(); return {Tok::Plus, "+", 0, line, col};
      case '*': advance(); return {Tok::Star, "*", 0, line, col};
      case '=': advance(); return {Tok::Eq, "=", 0, line, col};
      case '|': advance(); return {Tok::Bar, "|", 0, line, col};
      case '&': advance(); return {Tok::Amp, "&", 0, line, col};
      case '!': advance(); return {Tok::Bang, "!", 0, line, col};
      case '.': advance(); return {Tok::Dot, ".", 0, line, col};
      case '<':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '=') {
          advance();
          return {Tok::Le, "<=", 0, line, col};
        }
        if (pos_ + 1 < text_.size() && text_[pos_] == '-' &&
            text_[pos_ + 1] == '>') {
          advance();
          advance();
          return {Tok::IffArrow, "<->", 0, line, col};
        }
        return {Tok::Lt, "<", 0, line, col};
      case '-':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          advance();
          return {Tok::Arrow, "->", 0, line, col};
        }
        throw ParseError(line, col, "expected '->'");
      default:
        throw ParseError(line, col,
                         std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { bump(); }

  FormulaPtr parse_all() {
    FormulaPtr f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  void bump() { tok_ = lex_.next(); }

  void expect(Tok kind, const std::string& what) {
    if (tok_.kind != kind)
      throw ParseError(tok_.line, tok_.col,
                       "expected " + what + ", got '" + tok_.text + "'");
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(tok_.line, tok_.col, msg);
  }

  FormulaPtr formula() {
    if (tok_.kind == Tok::KwE || tok_.kind == Tok::KwA) return quant();
    FormulaPtr f = impl();
    while (tok_.kind == Tok::IffArrow) {
      bump();
      f = f_iff(f, impl());
    }
    return f;
  }

  FormulaPtr quant() {
    bool existential = tok_.kind == Tok::KwE;
    int line = tok_.line, col = tok_.col;
    bump();
    expect(Tok::Ident, "variable name");
    std::string name = tok_.text;
    bump();
    TermPtr bound;
    if (tok_.kind == Tok::Le) {
      bump();
      bound = term();
    }
    expect(Tok::Dot, "'.'");
    bump();
    FormulaPtr body = formula();
    try {
      if (bound)
        return existential ? f_bexists(name, bound, body)
                           : f_bforall(name, bound, body);
      return existential ? f_exists(name, body) : f_forall(name, body);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, col, e.what());
    }
  }

  FormulaPtr impl() {
    FormulaPtr lhs = disj();
    if (tok_.kind == Tok::Arrow) {
      bump();
      return f_implies(lhs, impl());
    }
    return lhs;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (tok_.kind == Tok::Bar) {
      bump();
      f = f_or(f, conj());
    }
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = unary();
    while (tok_.kind == Tok::Amp) {
      bump();
      f = f_and(f, unary());
    }
    return f;
  }

  FormulaPtr unary() {
    if (tok_.kind == Tok::Bang) {
      bump();
      return f_not(unary());
    }
    if (tok_.kind == Tok::LParen) {
      bump();
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      bump();
      return f;
    }
    return atom();
  }

  FormulaPtr atom() {
    TermPtr lhs = term();
    switch (tok_.kind) {
      case Tok::Eq: bump(); return f_eq(lhs, term());
      case Tok::Le: bump(); return f_le(lhs, term());
      case Tok::Lt: bump(); return f_lt(lhs, term());
      default: fail("expected '=', '<=' or '<'");
    }
  }

  TermPtr term() {
    TermPtr t = factor();
    while (tok_.kind == Tok::Plus) {
      bump();
      t = t_plus(t, factor());
    }
    return t;
  }

  TermPtr factor() {
    switch (tok_.kind) {
      case Tok::Nat: {
        Nat value = tok_.value;
        bump();
        if (tok_.kind == Tok::Star) {
          bump();
          return t_scalar(value, factor());
        }
        if (value == 0) return t_zero();
        return t_lit(value);
      }
      case Tok::KwS: {
        bump();
        expect(Tok::LParen, "'('");
        bump();
        TermPtr t = term();
        expect(Tok::RParen, "')'");
        bump();
        return t_succ(t);
      }
      case Tok::KwV: {
        bump();
        expect(Tok::LParen, "'('");
        bump();
        TermPtr t = term();
        expect(Tok::RParen, "')'");
        bump();
        return t_vk(t);
      }
      case Tok::Ident: {
        std::string name = tok_.text;
        bump();
        return t_var(name);
      }
      case Tok::LParen: {
        bump();
        TermPtr t = term();
        expect(Tok::RParen, "')'");
        bump();
        return t;
      }
      default:
        fail("expected a term");
    }
  }

  Lexer lex_;
  Token tok_;
};

}  // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// Term levels: 0 = term (+ chains allowed), 1 = factor.
void print_term(std::ostream& os, const TermPtr& t, int level) {
  switch (t->kind) {
    case TermKind::Zero:
      os << "0";
      break;
    case TermKind::Var:
      os << symbol_name(t->var);
      break;
    case TermKind::Literal:
      os << t->value;
      break;
    case TermKind::Succ:
      os << "S(";
      print_term(os, t->a, 0);
      os << ")";
      break;
    case TermKind::Vk:
      os << "V(";
      print_term(os, t->a, 0);
      os << ")";
      break;
    case TermKind::Scalar:
      os << t->value << "*";
      print_term(os, t->a, 1);
      break;
    case TermKind::Plus:
      if (level > 0) os << "(";
      print_term(os, t->a, 0);
      os << " + ";
      print_term(os, t->b, 1);
      if (level > 0) os << ")";
      break;
  }
}

// Formula levels: 0 = formula, 1 = impl, 2 = disj, 3 = conj, 4 = unary.
void print_formula(std::ostream& os, const FormulaPtr& f, int level) {
  auto parens = [&](int needed, auto&& body) {
    if (level > needed) {
      os << "(";
      body();
      os << ")";
    } else {
      body();
    }
  };
  switch (f->kind) {
    case FormKind::Eq:
    case FormKind::Le:
    case FormKind::Lt: {
      const char* op = f->kind == FormKind::Eq   ? " = "
                       : f->kind == FormKind::Le ? " <= "
                                                 : " < ";
      print_term(os, f->lhs, 0);
      os << op;
      print_term(os, f->rhs, 0);
      break;
    }
    case FormKind::Not:
      os << "!";
      print_formula(os, f->a, 4);
      break;
    case FormKind::And:
      parens(3, [&] {
        print_formula(os, f->a, 3);
        os << " & ";
        print_formula(os, f->b, 4);
      });
      break;
    case FormKind::Or:
      parens(2, [&] {
        print_formula(os, f->a, 2);
        os << " | ";
        print_formula(os, f->b, 3);
      });
      break;
    case FormKind::Implies:
      parens(1, [&] {
        print_formula(os, f->a, 2);
        os << " -> ";
        print_formula(os, f->b, 1);
      });
      break;
    case FormKind::Exists:
    case FormKind::Forall:
    case FormKind::BoundedExists:
    case FormKind::BoundedForall:
      parens(0, [&] {
        bool ex = f->kind == FormKind::Exists ||
                  f->kind == FormKind::BoundedExists;
        os << (ex ? "E " : "A ") << symbol_name(f->var);
        if (f->bound) {
          os << " <= ";
          print_term(os, f->bound, 0);
        }
        os << ". ";
        print_formula(os, f->a, 0);
      });
      break;
  }
}

}  // namespace

std::string print(const FormulaPtr& f) {
  std::ostringstream os;
  print_formula(os, f, 0);
  return os.str();
}

std::string print(const TermPtr& t) {
  std::ostringstream os;
  print_term(os, t, 0);
  return os.str();
}

// ---------------------------------------------------------------------------
// Desugaring
// ---------------------------------------------------------------------------

namespace {

TermPtr desugar_term(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Zero:
    case TermKind::Var:
      return t;
    case TermKind::Succ:
      return t_succ(desugar_term(t->a));
    case TermKind::Plus:
      return t_plus(desugar_term(t->a), desugar_term(t->b));
    case TermKind::Vk:
      return t_vk(desugar_term(t->a));
    case TermKind::Literal: {
      // S(S(...S(0)...)), n times
      if (t->value > 1000000)
        throw std::invalid_argument("desugar: numeral too large to expand");
      TermPtr out = t_zero();
      for (Nat i = 0; i < t->value; ++i) out = t_succ(out);
      return out;
    }
    case TermKind::Scalar: {
      // t + (t + (... (t + 0)...)), n times
      if (t->value > 1000000)
        throw std::invalid_argument("desugar: coefficient too large");
      TermPtr base = desugar_term(t->a);
      TermPtr out = t_zero();
      for (Nat i = 0; i < t->value; ++i) out = t_plus(base, out);
      return out;
    }
  }
  throw std::logic_error("desugar_term: unreachable");
}

}  // namespace

FormulaPtr desugar(const FormulaPtr& f) {
  switch (f->kind) {
    case FormKind::Eq:
      return f_eq(desugar_term(f->lhs), desugar_term(f->rhs));
    case FormKind::Le:
      return f_le(desugar_term(f->lhs), desugar_term(f->rhs));
    case FormKind::Lt:
      // x < y iff S(x) <= y over N
      return f_le(t_succ(desugar_term(f->lhs)), desugar_term(f->rhs));
    case FormKind::Not:
      return f_not(desugar(f->a));
    case FormKind::And:
      return f_and(desugar(f->a), desugar(f->b));
    case FormKind::Or:
      return f_not(f_and(f_not(desugar(f->a)), f_not(desugar(f->b))));
    case FormKind::Implies:
      return f_not(f_and(desugar(f->a), f_not(desugar(f->b))));
    case FormKind::Exists:
      return f_exists(f->var, desugar(f->a));
    case FormKind::Forall:
      return f_not(f_exists(f->var, f_not(desugar(f->a))));
    case FormKind::BoundedExists:
      return f_exists(f->var, f_and(f_le(t_var(f->var),
                                         desugar_term(f->bound)),
                                    desugar(f->a)));
    case FormKind::BoundedForall:
      return f_not(f_exists(
          f->var, f_and(f_le(t_var(f->var), desugar_term(f->bound)),
                        f_not(desugar(f->a)))));
  }
  throw std::logic_error("desugar: unreachable");
}

// ---------------------------------------------------------------------------
// Atom flattening
// ---------------------------------------------------------------------------

namespace {

struct Flattener {
  int counter = 0;

  int fresh() { return intern("_t" + std::to_string(++counter)); }

  // Lowers t to a variable, appending defining conjuncts and the fresh
  // variables they quantify.
  int lower(const TermPtr& t, std::vector<int>& fresh_vars,
            std::vector<FormulaPtr>& conjuncts) {
    switch (t->kind) {
      case TermKind::Var:
        return t->var;
      case TermKind::Zero: {
        int v = fresh();
        fresh_vars.push_back(v);
        conjuncts.push_back(f_eq(t_var(v), t_zero()));
        return v;
      }
      case TermKind::Succ: {
        int u = lower(t->a, fresh_vars, conjuncts);
        int v = fresh();
        fresh_vars.push_back(v);
        conjuncts.push_back(f_eq(t_succ(t_var(u)), t_var(v)));
        return v;
      }
      case TermKind::Plus: {
        int u1 = lower(t->a, fresh_vars, conjuncts);
        int u2 = lower(t->b, fresh_vars, conjuncts);
        int v = fresh();
        fresh_vars.push_back(v);
        conjuncts.push_back(f_eq(t_plus(t_var(u1), t_var(u2)), t_var(v)));
        return v;
      }
      case TermKind::Vk: {
        int u = lower(t->a, fresh_vars, conjuncts);
        int v = fresh();
        fresh_vars.push_back(v);
        conjuncts.push_back(f_eq(t_vk(t_var(u)), t_var(v)));
        return v;
      }
      default:
        throw std::invalid_argument("flatten: formula not desugared");
    }
  }

  // True when t is a single function application over variables, i.e. the
  // left-hand side of a simple atom.
  static bool shallow(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Succ:
      case TermKind::Vk:
        return t->a->kind == TermKind::Var;
      case TermKind::Plus:
        return t->a->kind == TermKind::Var && t->b->kind == TermKind::Var;
      default:
        return false;
    }
  }

  // Rewrites the children of a shallow application to lowered variables.
  TermPtr shallow_of(const TermPtr& t, std::vector<int>& fresh_vars,
                     std::vector<FormulaPtr>& conjuncts) {
    switch (t->kind) {
      case TermKind::Succ:
        return t_succ(t_var(lower(t->a, fresh_vars, conjuncts)));
      case TermKind::Vk:
        return t_vk(t_var(lower(t->a, fresh_vars, conjuncts)));
      case TermKind::Plus: {
        int u1 = lower(t->a, fresh_vars, conjuncts);
        int u2 = lower(t->b, fresh_vars, conjuncts);
        return t_plus(t_var(u1), t_var(u2));
      }
      default:
        throw std::logic_error("shallow_of: not an application");
    }
  }

  FormulaPtr wrap(std::vector<int>& fresh_vars,
                  std::vector<FormulaPtr>& conjuncts, FormulaPtr atom) {
    conjuncts.push_back(std::move(atom));
    FormulaPtr out = f_and_all(conjuncts);
    for (std::size_t i = fresh_vars.size(); i-- > 0;)
      out = f_exists(fresh_vars[i], out);
    return out;
  }

  FormulaPtr flat_atom(const FormulaPtr& f) {
    std::vector<int> fresh_vars;
    std::vector<FormulaPtr> conjuncts;
    if (f->kind == FormKind::Le) {
      int u = lower(f->lhs, fresh_vars, conjuncts);
      int v = lower(f->rhs, fresh_vars, conjuncts);
      if (fresh_vars.empty()) return f;
      return wrap(fresh_vars, conjuncts, f_le(t_var(u), t_var(v)));
    }
    if (f->kind != FormKind::Eq)
      throw std::invalid_argument("flatten: formula not desugared");
    TermPtr l = f->lhs, r = f->rhs;
    // Orient so any shallow function application sits on the left of a
    // variable right-hand side.
    if (r->kind != TermKind::Var && l->kind == TermKind::Var) std::swap(l, r);
    if (r->kind == TermKind::Var) {
      if (l->kind == TermKind::Var) {
        if (l->var == r->var) return f_true();
        return f;
      }
      if (l->kind == TermKind::Zero)
        return f_eq(r, t_zero());  // 0 = y as y = 0
      TermPtr app = shallow_of(l, fresh_vars, conjuncts);
      // S(x)=x etc. are fine: simple atoms may repeat a variable.
      if (fresh_vars.empty()) return f_eq(app, r);
      return wrap(fresh_vars, conjuncts, f_eq(app, r));
    }
    if (r->kind == TermKind::Zero && l->kind == TermKind::Var) return f;
    // General case: name both sides.
    int u = lower(l, fresh_vars, conjuncts);
    int v = lower(r, fresh_vars, conjuncts);
    return wrap(fresh_vars, conjuncts, f_eq(t_var(u), t_var(v)));
  }

  FormulaPtr run(const FormulaPtr& f) {
    switch (f->kind) {
      case FormKind::Eq:
      case FormKind::Le:
        return flat_atom(f);
      case FormKind::Not:
        return f_not(run(f->a));
      case FormKind::And:
        return f_and(run(f->a), run(f->b));
      case FormKind::Exists:
        return f_exists(f->var, run(f->a));
      default:
        throw std::invalid_argument("flatten: formula not desugared");
    }
  }
};

}  // namespace

FormulaPtr flatten(const FormulaPtr& f) { return Flattener{}.run(f); }

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

bool is_delta0(const FormulaPtr& f) {
  switch (f->kind) {
    case FormKind::Eq:
    case FormKind::Le:
    case FormKind::Lt:
      return true;
    case FormKind::Not:
      return is_delta0(f->a);
    case FormKind::And:
    case FormKind::Or:
    case FormKind::Implies:
      return is_delta0(f->a) && is_delta0(f->b);
    case FormKind::Exists:
    case FormKind::Forall:
      return false;
    case FormKind::BoundedExists:
    case FormKind::BoundedForall:
      return is_delta0(f->a);
  }
  return false;
}

bool is_pi1(const FormulaPtr& f) {
  const Formula* cur = f.get();
  while (cur->kind == FormKind::Forall) cur = cur->a.get();
  // Re-wrap-free check of the remaining matrix.
  switch (cur->kind) {
    case FormKind::Eq:
    case FormKind::Le:
    case FormKind::Lt:
      return true;
    default: {
      // Cheap structural copy avoidance: share the node.
      FormulaPtr matrix(f, cur);
      return is_delta0(matrix);
    }
  }
}

// ---------------------------------------------------------------------------
// Structural equality
// ---------------------------------------------------------------------------

bool struct_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Zero: return true;
    case TermKind::Var: return a->var == b->var;
    case TermKind::Literal: return a->value == b->value;
    case TermKind::Succ:
    case TermKind::Vk: return struct_eq(a->a, b->a);
    case TermKind::Scalar:
      return a->value == b->value && struct_eq(a->a, b->a);
    case TermKind::Plus:
      return struct_eq(a->a, b->a) && struct_eq(a->b, b->b);
  }
  return false;
}

bool struct_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormKind::Eq:
    case FormKind::Le:
    case FormKind::Lt:
      return struct_eq(a->lhs, b->lhs) && struct_eq(a->rhs, b->rhs);
    case FormKind::Not:
      return struct_eq(a->a, b->a);
    case FormKind::And:
    case FormKind::Or:
    case FormKind::Implies:
      return struct_eq(a->a, b->a) && struct_eq(a->b, b->b);
    case FormKind::Exists:
    case FormKind::Forall:
      return a->var == b->var && struct_eq(a->a, b->a);
    case FormKind::BoundedExists:
    case FormKind::BoundedForall:
      return a->var == b->var && struct_eq(a->bound, b->bound) &&
             struct_eq(a->a, b->a);
  }
  return false;
}

}  // namespace ba
