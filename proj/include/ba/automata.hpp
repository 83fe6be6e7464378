#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ba/arith.hpp"

namespace ba {

using Word = std::vector<Letter>;

/// Letters of Sigma_k^m are stored as dense codes in [0, k^m):
/// code = sum digits[i] * k^i. The all-zero letter is code 0.
int letter_code(int k, const Letter& letter);
Letter code_letter(int k, int arity, int code);
std::size_t alphabet_size(int k, int arity);

/// Nondeterministic automaton. next[state][code] is a sorted target list.
struct Nfa {
  int k = 2;
  int arity = 0;
  int initial = 0;
  std::vector<bool> accepting;
  std::vector<std::vector<std::vector<int>>> next;

  int num_states() const { return static_cast<int>(next.size()); }
  std::size_t num_letters() const { return alphabet_size(k, arity); }
};

/// Deterministic total automaton. next[state][code] is the unique target.
struct Dfa {
  int k = 2;
  int arity = 0;
  int initial = 0;
  std::vector<bool> accepting;
  std::vector<std::vector<int>> next;

  int num_states() const { return static_cast<int>(next.size()); }
  std::size_t num_letters() const { return alphabet_size(k, arity); }
};

Nfa to_nfa(const Dfa& a);

/// Structural well-formedness: table dimensions match k/arity/states and
/// every entry is a valid state. This is the totality check for Dfa.
bool is_total(const Dfa& a);
bool is_well_formed(const Nfa& a);

int run(const Dfa& a, int q, const Word& w);
bool accepts(const Dfa& a, const Word& w);
bool accepts(const Nfa& a, const Word& w);

/// Intersection; states are the reachable pairs.
Dfa product(const Dfa& a, const Dfa& b);
Nfa product(const Nfa& a, const Nfa& b);

/// Drops the last track (the highest code coefficient). Requires arity >= 1.
Nfa project(const Nfa& a);
Nfa project(const Dfa& a);

/// Appends n fresh unconstrained tracks.
Dfa cylindrify(const Dfa& a, int n);
Nfa cylindrify(const Nfa& a, int n);

/// Moves track t to position perm[t]; w is accepted iff the letter-wise
/// inverse permutation of w was accepted before.
Dfa reorder_tracks(const Dfa& a, const std::vector<int>& perm);
Nfa reorder_tracks(const Nfa& a, const std::vector<int>& perm);

/// Reads track t of the input from position positions[t] of a wider (or
/// equal, possibly shared) letter of arity new_arity. Subsumes
/// cylindrification, reordering and track merging in one table rewrite.
Dfa apply_context(const Dfa& a, const std::vector<int>& positions,
                  int new_arity);

Dfa complement(const Dfa& a);

/// Subset construction over reachable subsets; the empty subset is the
/// sink, so the result is always total.
Dfa determinize(const Nfa& a);
Dfa determinize(const Dfa& a);

/// Enlarges the accepting set to every state from which an accepting state
/// is reachable by all-zero letters. Restores padding closure.
Dfa zero_saturate(const Dfa& a);
Nfa zero_saturate(const Nfa& a);

/// Acceptance of the canonical shared-length expansion of xs. Requires a
/// padding-closed automaton for "some expansion accepted" semantics.
bool member(const Dfa& a, const std::vector<Nat>& xs);
bool member(const Nfa& a, const std::vector<Nat>& xs);

bool is_empty(const Nfa& a);
bool is_empty(const Dfa& a);

/// Accepted words of length <= max_len, in length-then-lexicographic order
/// (letters compared as digit tuples).
std::vector<Word> enumerate_words(const Nfa& a, int max_len);
std::vector<Word> enumerate_words(const Dfa& a, int max_len);

/// Number of tuples xs with all components < k^L and member(a, xs), by
/// dynamic programming over the words of length exactly L.
Nat count_below(const Dfa& a, int L);

std::string to_json(const Dfa& a);
std::string to_json(const Nfa& a);
Nfa nfa_from_json(const std::string& text);
Dfa dfa_from_json(const std::string& text);

std::string to_dot(const Dfa& a, bool suppress_dead = false);
std::string to_dot(const Nfa& a, bool suppress_dead = false);

/// Reproducible random instances for property tests. Transition density
/// and acceptance probability are both 1/2 for the Nfa generator.
Nfa random_nfa(int k, int arity, int states, std::mt19937_64& rng);
Dfa random_dfa(int k, int arity, int states, std::mt19937_64& rng);

}  // namespace ba
