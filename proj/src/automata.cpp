#include "ba/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ba {

namespace {

void check_arity(int have, int want, const char* who) {
  if (have != want)
    throw std::invalid_argument(std::string(who) + ": arity mismatch");
}

void check_same_alphabet(int ka, int kb, int ma, int mb, const char* who) {
  if (ka != kb || ma != mb)
    throw std::invalid_argument(std::string(who) + ": alphabet mismatch");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::size_t alphabet_size(int k, int arity) {
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(k);
  return n;
}

int letter_code(int k, const Letter& letter) {
  int code = 0, weight = 1;
  for (int d : letter.digits) {
    if (d < 0 || d >= k)
      throw std::invalid_argument("letter_code: digit out of range");
    code += d * weight;
    weight *= k;
  }
  return code;
}

Letter code_letter(int k, int arity, int code) {
  Letter letter;
  letter.digits.resize(arity);
  for (int i = 0; i < arity; ++i) {
    letter.digits[i] = code % k;
    code /= k;
  }
  return letter;
}

Nfa to_nfa(const Dfa& a) {
  Nfa out;
  out.k = a.k;
  out.arity = a.arity;
  out.initial = a.initial;
  out.accepting = a.accepting;
  out.next.resize(a.next.size());
  for (std::size_t s = 0; s < a.next.size(); ++s) {
    out.next[s].resize(a.next[s].size());
    for (std::size_t c = 0; c < a.next[s].size(); ++c)
      out.next[s][c] = {a.next[s][c]};
  }
  return out;
}

bool is_total(const Dfa& a) {
  std::size_t nl = a.num_letters();
  int n = a.num_states();
  if (n == 0 || a.initial < 0 || a.initial >= n) return false;
  if (a.accepting.size() != static_cast<std::size_t>(n)) return false;
  for (const auto& row : a.next) {
    if (row.size() != nl) return false;
    for (int t : row)
      if (t < 0 || t >= n) return false;
  }
  return true;
}

bool is_well_formed(const Nfa& a) {
  std::size_t nl = a.num_letters();
  int n = a.num_states();
  if (n == 0 || a.initial < 0 || a.initial >= n) return false;
  if (a.accepting.size() != static_cast<std::size_t>(n)) return false;
  for (const auto& row : a.next) {
    if (row.size() != nl) return false;
    for (const auto& targets : row)
      for (int t : targets)
        if (t < 0 || t >= n) return false;
  }
  return true;
}

int run(const Dfa& a, int q, const Word& w) {
  for (const Letter& letter : w) {
    check_arity(static_cast<int>(letter.digits.size()), a.arity, "run");
    q = a.next[q][letter_code(a.k, letter)];
  }
  return q;
}

bool accepts(const Dfa& a, const Word& w) {
  return a.accepting[run(a, a.initial, w)];
}

bool accepts(const Nfa& a, const Word& w) {
  std::vector<int> cur = {a.initial};
  for (const Letter& letter : w) {
    check_arity(static_cast<int>(letter.digits.size()), a.arity, "accepts");
    int code = letter_code(a.k, letter);
    std::vector<int> nxt;
    for (int q : cur)
      nxt.insert(nxt.end(), a.next[q][code].begin(), a.next[q][code].end());
    cur = sorted_unique(std::move(nxt));
    if (cur.empty()) return false;
  }
  for (int q : cur)
    if (a.accepting[q]) return true;
  return false;
}

Dfa product(const Dfa& a, const Dfa& b) {
  check_same_alphabet(a.k, b.k, a.arity, b.arity, "product");
  std::size_t nl = a.num_letters();
  Dfa out;
  out.k = a.k;
  out.arity = a.arity;
  out.initial = 0;
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> queue;
  auto id_of = [&](int p, int q) {
    auto [it, fresh] = ids.try_emplace({p, q}, static_cast<int>(ids.size()));
    if (fresh) {
      queue.push_back({p, q});
      out.accepting.push_back(a.accepting[p] && b.accepting[q]);
      out.next.emplace_back(nl);
    }
    return it->second;
  };
  id_of(a.initial, b.initial);
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    int s = ids.at({p, q});
    for (std::size_t c = 0; c < nl; ++c)
      out.next[s][c] = id_of(a.next[p][c], b.next[q][c]);
  }
  return out;
}

Nfa product(const Nfa& a, const Nfa& b) {
  check_same_alphabet(a.k, b.k, a.arity, b.arity, "product");
  std::size_t nl = a.num_letters();
  Nfa out;
  out.k = a.k;
  out.arity = a.arity;
  out.initial = 0;
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> queue;
  auto id_of = [&](int p, int q) {
    auto [it, fresh] = ids.try_emplace({p, q}, static_cast<int>(ids.size()));
    if (fresh) {
      queue.push_back({p, q});
      out.accepting.push_back(a.accepting[p] && b.accepting[q]);
      out.next.emplace_back(nl);
    }
    return it->second;
  };
  id_of(a.initial, b.initial);
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    int s = ids.at({p, q});
    for (std::size_t c = 0; c < nl; ++c) {
      std::vector<int> targets;
      for (int p2 : a.next[p][c])
        for (int q2 : b.next[q][c]) targets.push_back(id_of(p2, q2));
      out.next[s][c] = sorted_unique(std::move(targets));
    }
  }
  return out;
}

Nfa project(const Nfa& a) {
  if (a.arity < 1) throw std::invalid_argument("project: arity 0");
  std::size_t low = alphabet_size(a.k, a.arity - 1);
  Nfa out;
  out.k = a.k;
  out.arity = a.arity - 1;
  out.initial = a.initial;
  out.accepting = a.accepting;
  out.next.resize(a.next.size());
  for (std::size_t s = 0; s < a.next.size(); ++s) {
    out.next[s].resize(low);
    for (std::size_t c = 0; c < low; ++c) {
      std::vector<int> targets;
      for (int d = 0; d < a.k; ++d) {
        const auto& t = a.next[s][c + static_cast<std::size_t>(d) * low];
        targets.insert(targets.end(), t.begin(), t.end());
      }
      out.next[s][c] = sorted_unique(std::move(targets));
    }
  }
  return out;
}

Nfa project(const Dfa& a) { return project(to_nfa(a)); }

Dfa apply_context(const Dfa& a, const std::vector<int>& positions,
                  int new_arity) {
  if (static_cast<int>(positions.size()) != a.arity)
    throw std::invalid_argument("apply_context: positions size != arity");
  for (int p : positions)
    if (p < 0 || p >= new_arity)
      throw std::invalid_argument("apply_context: position out of range");
  std::size_t nl = alphabet_size(a.k, new_arity);
  Dfa out;
  out.k = a.k;
  out.arity = new_arity;
  out.initial = a.initial;
  out.accepting = a.accepting;
  out.next.resize(a.next.size());
  // old code of a new code, new letter digit at positions[t] feeding track t
  std::vector<int> old_of(nl);
  for (std::size_t c = 0; c < nl; ++c) {
    Letter letter = code_letter(a.k, new_arity, static_cast<int>(c));
    Letter source;
    source.digits.resize(positions.size());
    for (std::size_t t = 0; t < positions.size(); ++t)
      source.digits[t] = letter.digits[positions[t]];
    old_of[c] = letter_code(a.k, source);
  }
  for (std::size_t s = 0; s < a.next.size(); ++s) {
    out.next[s].resize(nl);
    for (std::size_t c = 0; c < nl; ++c) out.next[s][c] = a.next[s][old_of[c]];
  }
  return out;
}

Dfa cylindrify(const Dfa& a, int n) {
  if (n < 0) throw std::invalid_argument("cylindrify: negative count");
  std::vector<int> positions(a.arity);
  std::iota(positions.begin(), positions.end(), 0);
  return apply_context(a, positions, a.arity + n);
}

Nfa cylindrify(const Nfa& a, int n) {
  if (n < 0) throw std::invalid_argument("cylindrify: negative count");
  std::size_t base = a.num_letters();
  std::size_t nl = alphabet_size(a.k, a.arity + n);
  Nfa out;
  out.k = a.k;
  out.arity = a.arity + n;
  out.initial = a.initial;
  out.accepting = a.accepting;
  out.next.resize(a.next.size());
  for (std::size_t s = 0; s < a.next.size(); ++s) {
    out.next[s].resize(nl);
    for (std::size_t c = 0; c < nl; ++c) out.next[s][c] = a.next[s][c % base];
  }
  return out;
}

namespace {

std::vector<int> check_perm(const std::vector<int>& perm, int arity) {
  if (static_cast<int>(perm.size()) != arity)
    throw std::invalid_argument("reorder_tracks: not a permutation");
  std::vector<bool> seen(arity, false);
  for (int p : perm) {
    if (p < 0 || p >= arity || seen[p])
      throw std::invalid_argument("reorder_tracks: not a permutation");
    seen[p] = true;
  }
  return perm;
}

}  // namespace

Dfa reorder_tracks(const Dfa& a, const std::vector<int>& perm) {
  return apply_context(a, check_perm(perm, a.arity), a.arity);
}

Nfa reorder_tracks(const Nfa& a, const std::vector<int>& perm) {
  check_perm(perm, a.arity);
  std::size_t nl = a.num_letters();
  Nfa out = a;
  for (std::size_t c = 0; c < nl; ++c) {
    Letter letter = code_letter(a.k, a.arity, static_cast<int>(c));
    Letter source;
    source.digits.resize(a.arity);
    for (int t = 0; t < a.arity; ++t)
      source.digits[t] = letter.digits[perm[t]];
    int old_code = letter_code(a.k, source);
    for (std::size_t s = 0; s < a.next.size(); ++s)
      out.next[s][c] = a.next[s][old_code];
  }
  return out;
}

Dfa complement(const Dfa& a) {
  if (!is_total(a)) throw std::invalid_argument("complement: not total");
  Dfa out = a;
  for (std::size_t s = 0; s < out.accepting.size(); ++s)
    out.accepting[s] = !out.accepting[s];
  return out;
}

Dfa determinize(const Nfa& a) {
  std::size_t nl = a.num_letters();
  Dfa out;
  out.k = a.k;
  out.arity = a.arity;
  out.initial = 0;
  std::map<std::vector<int>, int> ids;
  std::deque<std::vector<int>> queue;
  auto id_of = [&](std::vector<int> subset) {
    auto [it, fresh] =
        ids.try_emplace(std::move(subset), static_cast<int>(ids.size()));
    if (fresh) {
      queue.push_back(it->first);
      bool acc = false;
      for (int q : it->first) acc = acc || a.accepting[q];
      out.accepting.push_back(acc);
      out.next.emplace_back(nl);
    }
    return it->second;
  };
  id_of({a.initial});
  while (!queue.empty()) {
    std::vector<int> subset = queue.front();
    queue.pop_front();
    int s = ids.at(subset);
    for (std::size_t c = 0; c < nl; ++c) {
      std::vector<int> targets;
      for (int q : subset)
        targets.insert(targets.end(), a.next[q][c].begin(),
                       a.next[q][c].end());
      out.next[s][c] = id_of(sorted_unique(std::move(targets)));
    }
  }
  return out;
}

Dfa determinize(const Dfa& a) { return determinize(to_nfa(a)); }

namespace {

// States from which an accepting state is reachable by all-zero letters.
template <typename A, typename Targets>
std::vector<bool> zero_reach(const A& a, Targets&& targets_of) {
  int n = a.num_states();
  std::vector<std::vector<int>> rev(n);
  for (int s = 0; s < n; ++s)
    for (int t : targets_of(s)) rev[t].push_back(s);
  std::vector<bool> good(n, false);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s)
    if (a.accepting[s]) {
      good[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int s : rev[t])
      if (!good[s]) {
        good[s] = true;
        queue.push_back(s);
      }
  }
  return good;
}

}  // namespace

Dfa zero_saturate(const Dfa& a) {
  Dfa out = a;
  out.accepting = zero_reach(
      a, [&](int s) { return std::vector<int>{a.next[s][0]}; });
  return out;
}

Nfa zero_saturate(const Nfa& a) {
  Nfa out = a;
  out.accepting = zero_reach(a, [&](int s) { return a.next[s][0]; });
  return out;
}

namespace {

template <typename A>
bool member_impl(const A& a, const std::vector<Nat>& xs) {
  check_arity(static_cast<int>(xs.size()), a.arity, "member");
  std::size_t len = 0;
  for (const Nat& x : xs) len = std::max(len, digit_count(a.k, x));
  return accepts(a, tuple_expansion(a.k, xs, len));
}

}  // namespace

bool member(const Dfa& a, const std::vector<Nat>& xs) {
  return member_impl(a, xs);
}
bool member(const Nfa& a, const std::vector<Nat>& xs) {
  return member_impl(a, xs);
}

bool is_empty(const Nfa& a) {
  int n = a.num_states();
  std::vector<bool> seen(n, false);
  std::deque<int> queue = {a.initial};
  seen[a.initial] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    if (a.accepting[s]) return false;
    for (const auto& targets : a.next[s])
      for (int t : targets)
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
  }
  return true;
}

bool is_empty(const Dfa& a) { return is_empty(to_nfa(a)); }

std::vector<Word> enumerate_words(const Nfa& a, int max_len) {
  // Codes sorted so that words come out in lexicographic letter order.
  std::vector<int> order(a.num_letters());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return code_letter(a.k, a.arity, x) < code_letter(a.k, a.arity, y);
  });
  std::vector<Word> out;
  Word word;
  std::vector<std::vector<int>> stack = {{a.initial}};
  auto dfs = [&](auto&& self, int depth) -> void {
    // copy: recursion grows the stack and would invalidate a reference
    const std::vector<int> cur = stack.back();
    for (int q : cur)
      if (a.accepting[q]) {
        out.push_back(word);
        break;
      }
    if (depth == max_len) return;
    for (int code : order) {
      std::vector<int> nxt;
      for (int q : cur)
        nxt.insert(nxt.end(), a.next[q][code].begin(), a.next[q][code].end());
      nxt = sorted_unique(std::move(nxt));
      if (nxt.empty()) continue;
      word.push_back(code_letter(a.k, a.arity, code));
      stack.push_back(std::move(nxt));
      self(self, depth + 1);
      stack.pop_back();
      word.pop_back();
    }
  };
  dfs(dfs, 0);
  std::stable_sort(out.begin(), out.end(),
                   [](const Word& x, const Word& y) {
                     if (x.size() != y.size()) return x.size() < y.size();
                     return x < y;
                   });
  return out;
}

std::vector<Word> enumerate_words(const Dfa& a, int max_len) {
  return enumerate_words(to_nfa(a), max_len);
}

Nat count_below(const Dfa& a, int L) {
  if (!is_total(a)) throw std::invalid_argument("count_below: not total");
  std::size_t nl = a.num_letters();
  std::vector<Nat> cnt(a.num_states(), Nat(0));
  cnt[a.initial] = 1;
  for (int step = 0; step < L; ++step) {
    std::vector<Nat> nxt(a.num_states(), Nat(0));
    for (int s = 0; s < a.num_states(); ++s) {
      if (cnt[s] == 0) continue;
      for (std::size_t c = 0; c < nl; ++c) nxt[a.next[s][c]] += cnt[s];
    }
    cnt = std::move(nxt);
  }
  Nat total = 0;
  for (int s = 0; s < a.num_states(); ++s)
    if (a.accepting[s]) total += cnt[s];
  return total;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json encode(int k, int arity, int states, int initial,
            const std::vector<bool>& accepting, const json& transitions) {
  json acc = json::array();
  for (int s = 0; s < states; ++s)
    if (accepting[s]) acc.push_back(s);
  return json{{"k", k},
              {"arity", arity},
              {"states", states},
              {"initial", initial},
              {"accepting", acc},
              {"transitions", transitions}};
}

json letter_json(int k, int arity, int code) {
  json digits = json::array();
  for (int d : code_letter(k, arity, code).digits) digits.push_back(d);
  return digits;
}

}  // namespace

std::string to_json(const Dfa& a) {
  json transitions = json::array();
  for (int s = 0; s < a.num_states(); ++s)
    for (std::size_t c = 0; c < a.num_letters(); ++c)
      transitions.push_back(json::array(
          {s, letter_json(a.k, a.arity, static_cast<int>(c)), a.next[s][c]}));
  return encode(a.k, a.arity, a.num_states(), a.initial, a.accepting,
                transitions)
      .dump(2);
}

std::string to_json(const Nfa& a) {
  json transitions = json::array();
  for (int s = 0; s < a.num_states(); ++s)
    for (std::size_t c = 0; c < a.num_letters(); ++c)
      for (int t : a.next[s][c])
        transitions.push_back(json::array(
            {s, letter_json(a.k, a.arity, static_cast<int>(c)), t}));
  return encode(a.k, a.arity, a.num_states(), a.initial, a.accepting,
                transitions)
      .dump(2);
}

Nfa nfa_from_json(const std::string& text) {
  json j = json::parse(text);
  Nfa a;
  a.k = j.at("k").get<int>();
  check_base(a.k);
  a.arity = j.at("arity").get<int>();
  if (a.arity < 0) throw std::invalid_argument("from_json: negative arity");
  int states = j.at("states").get<int>();
  if (states <= 0) throw std::invalid_argument("from_json: no states");
  a.initial = j.at("initial").get<int>();
  a.accepting.assign(states, false);
  for (int s : j.at("accepting")) {
    if (s < 0 || s >= states)
      throw std::invalid_argument("from_json: accepting state out of range");
    a.accepting[s] = true;
  }
  a.next.assign(states, std::vector<std::vector<int>>(a.num_letters()));
  for (const json& t : j.at("transitions")) {
    int from = t.at(0).get<int>();
    int to = t.at(2).get<int>();
    if (from < 0 || from >= states || to < 0 || to >= states)
      throw std::invalid_argument("from_json: transition state out of range");
    Letter letter;
    for (const json& d : t.at(1)) letter.digits.push_back(d.get<int>());
    if (static_cast<int>(letter.digits.size()) != a.arity)
      throw std::invalid_argument("from_json: letter arity mismatch");
    a.next[from][letter_code(a.k, letter)].push_back(to);
  }
  for (auto& row : a.next)
    for (auto& targets : row) targets = sorted_unique(std::move(targets));
  if (!is_well_formed(a))
    throw std::invalid_argument("from_json: malformed automaton");
  return a;
}

Dfa dfa_from_json(const std::string& text) {
  Nfa n = nfa_from_json(text);
  Dfa a;
  a.k = n.k;
  a.arity = n.arity;
  a.initial = n.initial;
  a.accepting = n.accepting;
  a.next.resize(n.next.size());
  for (std::size_t s = 0; s < n.next.size(); ++s) {
    a.next[s].resize(n.next[s].size());
    for (std::size_t c = 0; c < n.next[s].size(); ++c) {
      if (n.next[s][c].size() != 1)
        throw std::invalid_argument("dfa_from_json: not deterministic total");
      a.next[s][c] = n.next[s][c][0];
    }
  }
  return a;
}

namespace {

std::string letter_label(int k, int arity, int code) {
  Letter letter = code_letter(k, arity, code);
  std::string label;
  for (std::size_t i = 0; i < letter.digits.size(); ++i) {
    if (i) label += ",";
    label += std::to_string(letter.digits[i]);
  }
  return label;
}

// States from which some accepting state is reachable.
template <typename Targets>
std::vector<bool> live_states(int n, const std::vector<bool>& accepting,
                              Targets&& targets_of) {
  std::vector<std::vector<int>> rev(n);
  for (int s = 0; s < n; ++s)
    for (int t : targets_of(s)) rev[t].push_back(s);
  std::vector<bool> live(n, false);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s)
    if (accepting[s]) {
      live[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int s : rev[t])
      if (!live[s]) {
        live[s] = true;
        queue.push_back(s);
      }
  }
  return live;
}

template <typename EdgeEmit>
std::string dot_impl(int n, int initial, const std::vector<bool>& accepting,
                     const std::vector<bool>& keep, EdgeEmit&& emit_edges) {
  std::ostringstream os;
  os << "digraph automaton {\n";
  os << "  rankdir=LR;\n";
  os << "  __start [shape=point];\n";
  for (int s = 0; s < n; ++s) {
    if (!keep[s]) continue;
    os << "  q" << s << " [shape="
       << (accepting[s] ? "doublecircle" : "circle") << "];\n";
  }
  os << "  __start -> q" << initial << ";\n";
  emit_edges(os);
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const Dfa& a, bool suppress_dead) {
  int n = a.num_states();
  std::vector<bool> keep(n, true);
  if (suppress_dead) {
    keep = live_states(n, a.accepting, [&](int s) { return a.next[s]; });
    keep[a.initial] = true;
  }
  return dot_impl(n, a.initial, a.accepting, keep, [&](std::ostream& os) {
    for (int s = 0; s < n; ++s) {
      if (!keep[s]) continue;
      // Group parallel edges into one label.
      std::map<int, std::string> labels;
      for (std::size_t c = 0; c < a.num_letters(); ++c) {
        int t = a.next[s][c];
        if (!keep[t]) continue;
        std::string& l = labels[t];
        if (!l.empty()) l += " | ";
        l += letter_label(a.k, a.arity, static_cast<int>(c));
      }
      for (const auto& [t, label] : labels)
        os << "  q" << s << " -> q" << t << " [label=\"" << label << "\"];\n";
    }
  });
}

std::string to_dot(const Nfa& a, bool suppress_dead) {
  int n = a.num_states();
  std::vector<bool> keep(n, true);
  if (suppress_dead) {
    keep = live_states(n, a.accepting, [&](int s) {
      std::vector<int> all;
      for (const auto& targets : a.next[s])
        all.insert(all.end(), targets.begin(), targets.end());
      return all;
    });
    keep[a.initial] = true;
  }
  return dot_impl(n, a.initial, a.accepting, keep, [&](std::ostream& os) {
    for (int s = 0; s < n; ++s) {
      if (!keep[s]) continue;
      std::map<int, std::string> labels;
      for (std::size_t c = 0; c < a.num_letters(); ++c)
        for (int t : a.next[s][c]) {
          if (!keep[t]) continue;
          std::string& l = labels[t];
          if (!l.empty()) l += " | ";
          l += letter_label(a.k, a.arity, static_cast<int>(c));
        }
      for (const auto& [t, label] : labels)
        os << "  q" << s << " -> q" << t << " [label=\"" << label << "\"];\n";
    }
  });
}

Nfa random_nfa(int k, int arity, int states, std::mt19937_64& rng) {
  check_base(k);
  Nfa a;
  a.k = k;
  a.arity = arity;
  a.initial = 0;
  a.accepting.resize(states);
  a.next.assign(states, std::vector<std::vector<int>>(alphabet_size(k, arity)));
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < states; ++s) {
    a.accepting[s] = coin(rng);
    for (auto& targets : a.next[s])
      for (int t = 0; t < states; ++t)
        if (coin(rng)) targets.push_back(t);
  }
  return a;
}

Dfa random_dfa(int k, int arity, int states, std::mt19937_64& rng) {
  check_base(k);
  Dfa a;
  a.k = k;
  a.arity = arity;
  a.initial = 0;
  a.accepting.resize(states);
  a.next.assign(states, std::vector<int>(alphabet_size(k, arity)));
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> pick(0, states - 1);
  for (int s = 0; s < states; ++s) {
    a.accepting[s] = coin(rng);
    for (auto& t : a.next[s]) t = pick(rng);
  }
  return a;
}

}  // namespace ba
