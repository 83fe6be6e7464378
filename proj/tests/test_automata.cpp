#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ba/automata.hpp"
#include "ba/base_automata.hpp"

using namespace ba;

namespace {

Letter lt(std::vector<int> digits) { return Letter{std::move(digits)}; }

std::set<std::vector<std::vector<int>>> language(const Nfa& a, int max_len) {
  std::set<std::vector<std::vector<int>>> out;
  for (const Word& w : enumerate_words(a, max_len)) {
    std::vector<std::vector<int>> raw;
    for (const Letter& l : w) raw.push_back(l.digits);
    out.insert(raw);
  }
  return out;
}

std::set<std::vector<std::vector<int>>> language(const Dfa& a, int max_len) {
  return language(to_nfa(a), max_len);
}

// All words of length <= max_len over Sigma_k^arity.
std::vector<Word> all_words(int k, int arity, int max_len) {
  std::vector<Word> out = {{}};
  std::vector<Word> layer = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next_layer;
    for (const Word& w : layer)
      for (std::size_t c = 0; c < alphabet_size(k, arity); ++c) {
        Word w2 = w;
        w2.push_back(code_letter(k, arity, static_cast<int>(c)));
        next_layer.push_back(w2);
        out.push_back(std::move(w2));
      }
    layer = std::move(next_layer);
  }
  return out;
}

Word drop_last_track(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    Letter m = l;
    m.digits.pop_back();
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("letter codes") {
  CHECK(letter_code(2, lt({1, 0, 1})) == 5);
  CHECK(letter_code(3, lt({2, 1})) == 5);
  CHECK(letter_code(2, lt({})) == 0);
  CHECK(code_letter(2, 3, 5).digits == std::vector<int>{1, 0, 1});
  CHECK(code_letter(3, 2, 5).digits == std::vector<int>{2, 1});
  CHECK(alphabet_size(2, 3) == 8);
  CHECK(alphabet_size(5, 0) == 1);
  CHECK_THROWS_AS(letter_code(2, lt({2})), std::invalid_argument);
}

TEST_CASE("run and accepts on the addition automaton") {
  Dfa plus = a_plus(2);
  CHECK(run(plus, 0, {}) == 0);
  // 3 + 1 = 4: carries ripple through the low bits
  Word w = {lt({1, 1, 0}), lt({1, 0, 0}), lt({0, 0, 1})};
  CHECK(run(plus, 0, w) == 0);
  CHECK(accepts(plus, w));
  Dfa le = a_le(2);
  CHECK(run(le, 0, {lt({1, 1}), lt({0, 1}), lt({1, 0})}) == 1);
  CHECK_THROWS_AS(run(plus, 0, Word{lt({1, 1})}), std::invalid_argument);
}

TEST_CASE("product intersects languages") {
  Dfa z = a_zero(2);
  CHECK(is_empty(product(z, complement(z))));

  // universal one-state automaton
  Dfa u;
  u.k = 2;
  u.arity = 1;
  u.initial = 0;
  u.accepting = {true};
  u.next = {{0, 0}};
  CHECK(language(product(z, u), 4) == language(z, 4));

  // x <= y and y <= x iff x = y
  Dfa both = product(a_le(2), reorder_tracks(a_le(2), {1, 0}));
  CHECK(language(both, 5) == language(a_eq(2), 5));
}

TEST_CASE("project drops the last track") {
  Nfa p = project(a_succ(2));
  CHECK(p.arity == 1);
  // S(1) = 2 forces a second letter; the bare [1] only appears after
  // zero saturation
  CHECK(accepts(p, {lt({1}), lt({0})}));
  CHECK_FALSE(accepts(p, {lt({1})}));
  CHECK(accepts(zero_saturate(p), {lt({1})}));
  std::set<std::vector<std::vector<int>>> expect;
  for (const Word& w : all_words(2, 2, 4))
    if (accepts(a_succ(2), w)) {
      std::vector<std::vector<int>> raw;
      for (const Letter& l : drop_last_track(w)) raw.push_back(l.digits);
      expect.insert(raw);
    }
  CHECK(language(p, 4) == expect);
  CHECK_THROWS_AS(project(project(p)), std::invalid_argument);

  Nfa never = to_nfa(a_zero(2));
  never.accepting = {false, false};
  CHECK(is_empty(project(cylindrify(never, 1))));
}

TEST_CASE("cylindrify adds free tracks") {
  Dfa z = a_zero(2);
  Dfa c = cylindrify(z, 1);
  CHECK(c.arity == 2);
  CHECK(is_total(c));
  for (int b = 0; b < 2; ++b) CHECK(accepts(c, {lt({0, b})}));
  CHECK_FALSE(accepts(c, {lt({1, 1})}));
  CHECK(language(cylindrify(z, 0), 4) == language(z, 4));
  // each word of the base language pairs with every second track
  CHECK(count_below(c, 3) == 8);
}

TEST_CASE("reorder_tracks permutes letters") {
  Dfa le = a_le(2);
  Dfa ge = reorder_tracks(le, {1, 0});
  CHECK(member(ge, {Nat(5), Nat(3)}));
  CHECK_FALSE(member(ge, {Nat(3), Nat(5)}));
  CHECK(language(reorder_tracks(ge, {1, 0}), 5) == language(le, 5));
  std::vector<int> id = {0, 1};
  CHECK(language(reorder_tracks(le, id), 5) == language(le, 5));
  CHECK_THROWS_AS(reorder_tracks(le, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(reorder_tracks(le, {0}), std::invalid_argument);
}

TEST_CASE("complement flips membership wordwise") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int k = trial % 2 ? 2 : 3;
    Dfa a = random_dfa(k, trial % 3 ? 1 : 2, 2 + trial % 4, rng);
    Dfa ca = complement(a);
    CHECK(is_total(ca));
    for (const Word& w : all_words(k, a.arity, 3))
      CHECK(accepts(a, w) != accepts(ca, w));
    CHECK(language(complement(ca), 3) == language(a, 3));
  }
}

TEST_CASE("determinize preserves the language") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int k = trial % 2 ? 2 : 3;
    Nfa a = random_nfa(k, trial % 3 ? 1 : 2, 2 + trial % 4, rng);
    Dfa d = determinize(a);
    CHECK(is_total(d));
    for (const Word& w : all_words(k, a.arity, 3))
      CHECK(accepts(a, w) == accepts(d, w));
  }
  CHECK(language(determinize(project(a_succ(2))), 4) ==
        language(project(a_succ(2)), 4));
}

TEST_CASE("zero_saturate closes under padding removal") {
  // accepts (1),(0) and its zero paddings, but not the bare (1)
  Dfa a;
  a.k = 2;
  a.arity = 1;
  a.initial = 0;
  a.accepting = {false, false, true, false};
  a.next = {{3, 1}, {2, 3}, {2, 3}, {3, 3}};
  Dfa s = zero_saturate(a);
  CHECK(accepts(s, {lt({1})}));
  CHECK(accepts(s, {lt({1}), lt({0})}));
  CHECK_FALSE(accepts(s, {lt({0})}));
  CHECK(s.accepting == zero_saturate(s).accepting);
  for (const Word& w : all_words(2, 1, 4)) {
    Word padded = w;
    padded.push_back(lt({0}));
    CHECK(accepts(s, w) == accepts(s, padded));
  }
  // already padding closed: accepting set unchanged
  CHECK(zero_saturate(a_plus(3)).accepting == a_plus(3).accepting);
}

TEST_CASE("member uses the canonical expansion") {
  CHECK(member(a_plus(2), {Nat(3), Nat(1), Nat(4)}));
  CHECK_FALSE(member(a_plus(2), {Nat(1), Nat(1), Nat(3)}));
  CHECK(member(a_zero(2), {Nat(0)}));
  CHECK_THROWS_AS(member(a_zero(2), {Nat(0), Nat(0)}), std::invalid_argument);
}

TEST_CASE("emptiness, enumeration and counting") {
  CHECK(is_empty(product(a_zero(2), complement(a_zero(2)))));
  CHECK_FALSE(is_empty(a_le(3)));

  auto words = enumerate_words(a_zero(2), 2);
  REQUIRE(words.size() == 3);
  CHECK(words[0] == Word{});
  CHECK(words[1] == Word{lt({0})});
  CHECK(words[2] == Word{lt({0}), lt({0})});

  // powers of 2 below 16: the compiled "V(x) = x and x != 0" shape
  Dfa pow = product(a_v(2), a_eq(2));
  Dfa pos = complement(cylindrify(a_zero(2), 1));
  Dfa p = determinize(project(product(pow, pos)));
  CHECK(count_below(zero_saturate(p), 4) == 4);

  // counting agrees with brute force over words of length exactly L
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Dfa a = random_dfa(2, 2, 3, rng);
    int L = 3;
    Nat brute = 0;
    for (const Word& w : all_words(2, 2, L))
      if (w.size() == 3 && accepts(a, w)) ++brute;
    CHECK(count_below(a, L) == brute);
  }
  // and with membership on a padding-closed automaton
  Dfa le = a_le(3);
  Nat brute = 0;
  for (int x = 0; x < 27; ++x)
    for (int y = 0; y < 27; ++y)
      if (x <= y) ++brute;
  CHECK(count_below(le, 3) == brute);
}

TEST_CASE("enumeration is length then lexicographic") {
  auto words = enumerate_words(a_le(2), 2);
  for (std::size_t i = 1; i < words.size(); ++i) {
    const Word& a = words[i - 1];
    const Word& b = words[i];
    bool ordered = a.size() < b.size() || (a.size() == b.size() && a < b);
    CHECK(ordered);
  }
}

TEST_CASE("apply_context generalizes plumbing") {
  // duplicate variable: x <= x via a shared track
  Dfa refl = apply_context(a_le(2), {0, 0}, 1);
  for (int x = 0; x < 16; ++x) CHECK(member(refl, {Nat(x)}));

  // read (y, x) from (x, y): same as the swap permutation
  Dfa swapped = apply_context(a_le(2), {1, 0}, 2);
  CHECK(language(swapped, 4) == language(reorder_tracks(a_le(2), {1, 0}), 4));

  // embed x = 0 as track 1 of 3
  Dfa wide = apply_context(a_zero(2), {1}, 3);
  CHECK(wide.arity == 3);
  CHECK(member(wide, {Nat(6), Nat(0), Nat(3)}));
  CHECK_FALSE(member(wide, {Nat(0), Nat(1), Nat(0)}));
  CHECK_THROWS_AS(apply_context(a_le(2), {0, 2}, 2), std::invalid_argument);
}

TEST_CASE("json round-trip") {
  Dfa plus = a_plus(3);
  Dfa back = dfa_from_json(to_json(plus));
  CHECK(back.k == plus.k);
  CHECK(back.arity == plus.arity);
  CHECK(back.initial == plus.initial);
  CHECK(back.accepting == plus.accepting);
  CHECK(back.next == plus.next);

  Nfa p = project(a_succ(2));
  Nfa nback = nfa_from_json(to_json(p));
  CHECK(language(nback, 4) == language(p, 4));

  CHECK_THROWS_AS(nfa_from_json("{\"k\": 1}"), std::exception);
  CHECK_THROWS_AS(dfa_from_json(to_json(p)), std::invalid_argument);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(a_zero(2));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("q1") != std::string::npos);
  std::string trimmed = to_dot(a_zero(2), true);
  CHECK(trimmed.find("q1") == std::string::npos);
}

TEST_CASE("dfa ops keep totality") {
  Dfa a = a_le(3), b = a_eq(3);
  CHECK(is_total(product(a, b)));
  CHECK(is_total(cylindrify(a, 2)));
  CHECK(is_total(reorder_tracks(a, {1, 0})));
  CHECK(is_total(complement(a)));
  CHECK(is_total(determinize(project(a))));
}
