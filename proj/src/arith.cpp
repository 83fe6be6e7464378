#include "ba/arith.hpp"

#include <stdexcept>

namespace ba {

void check_base(int k) {
  if (k < 2) throw std::invalid_argument("base k must be >= 2");
}

Nat pow_k(int k, std::size_t e) {
  check_base(k);
  Nat r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= k;
  return r;
}

std::size_t digit_count(int k, const Nat& x) {
  check_base(k);
  std::size_t n = 0;
  Nat v = x;
  while (v > 0) {
    v /= k;
    ++n;
  }
  return n;
}

Nat v_k(int k, const Nat& x) {
  check_base(k);
  if (x == 0) return 0;
  Nat p = 1;
  Nat v = x;
  while (v % k == 0) {
    v /= k;
    p *= k;
  }
  return p;
}

bool is_power(int k, const Nat& d) {
  check_base(k);
  return d > 0 && v_k(k, d) == d;
}

std::vector<int> expansion(int k, const Nat& x) {
  check_base(k);
  std::vector<int> digits;
  Nat v = x;
  while (v > 0) {
    digits.push_back(static_cast<int>(v % k));
    v /= k;
  }
  return digits;
}

std::vector<int> expansion(int k, const Nat& x, std::size_t len) {
  std::vector<int> digits = expansion(k, x);
  if (digits.size() > len)
    throw std::invalid_argument("expansion: length too small for value");
  digits.resize(len, 0);
  return digits;
}

Nat from_expansion(int k, const std::vector<int>& digits) {
  check_base(k);
  Nat x = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < 0 || digits[i] >= k)
      throw std::invalid_argument("from_expansion: digit out of range");
    x = x * k + digits[i];
  }
  return x;
}

std::vector<Letter> tuple_expansion(int k, const std::vector<Nat>& xs,
                                    std::size_t len) {
  std::vector<std::vector<int>> tracks;
  tracks.reserve(xs.size());
  for (const Nat& x : xs) tracks.push_back(expansion(k, x, len));
  std::vector<Letter> word(len);
  for (std::size_t i = 0; i < len; ++i) {
    word[i].digits.resize(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j)
      word[i].digits[j] = tracks[j][i];
  }
  return word;
}

int digit_at(int k, const Nat& x, const Nat& d) {
  if (!is_power(k, d)) throw std::invalid_argument("digit_at: d not a power");
  return static_cast<int>((x / d) % k);
}

Nat restrict_to(int k, const Nat& x, const Nat& d) {
  if (!is_power(k, d))
    throw std::invalid_argument("restrict_to: d not a power");
  return x % d;
}

Nat g_bound(int k, const std::vector<Nat>& xs) {
  check_base(k);
  if (xs.empty()) throw std::invalid_argument("g_bound: empty tuple");
  Nat mx = 0;
  for (const Nat& x : xs)
    if (x > mx) mx = x;
  Nat p = 1;
  while (p <= mx) p *= k;
  return p;
}

}  // namespace ba
