#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace ba {

/// Unbounded non-negative integer; the carrier of all arithmetic.
using Nat = boost::multiprecision::cpp_int;

/// One symbol of the tuple alphabet Sigma_k^m: a base-k digit per track.
/// An arity-0 automaton reads the unique empty letter.
struct Letter {
  std::vector<int> digits;
  bool operator==(const Letter&) const = default;
  bool operator<(const Letter& other) const { return digits < other.digits; }
};

/// Throws std::invalid_argument unless k >= 2.
void check_base(int k);

Nat pow_k(int k, std::size_t e);

/// Number of base-k digits in the minimal expansion of x (0 for x = 0).
std::size_t digit_count(int k, const Nat& x);

/// Largest power of k dividing x, with v_k(0) = 0.
Nat v_k(int k, const Nat& x);

/// True iff d is a power of k (including k^0 = 1), i.e. d > 0 and v_k(d) = d.
bool is_power(int k, const Nat& d);

/// Least-significant-digit-first base-k expansion; empty for x = 0.
std::vector<int> expansion(int k, const Nat& x);

/// Fixed-length expansion, zero padded. Throws if k^len <= x (for x > 0).
std::vector<int> expansion(int k, const Nat& x, std::size_t len);

Nat from_expansion(int k, const std::vector<int>& digits);

/// Word of length len over Sigma_k^|xs| whose j-th track expands xs[j].
std::vector<Letter> tuple_expansion(int k, const std::vector<Nat>& xs,
                                    std::size_t len);

/// Coefficient of d in the base-k expansion of x. Requires is_power(k, d).
int digit_at(int k, const Nat& x, const Nat& d);

/// x mod d, the low-order digit block of x. Requires is_power(k, d).
Nat restrict_to(int k, const Nat& x, const Nat& d);

/// Least power of k strictly greater than every component of xs (1 when
/// all components are 0). Requires xs non-empty.
Nat g_bound(int k, const std::vector<Nat>& xs);

}  // namespace ba
