#include "ba/base_automata.hpp"

namespace ba {

namespace {

Dfa shell(int k, int arity, int states, int initial,
          std::vector<bool> accepting, int sink) {
  Dfa a;
  a.k = k;
  a.arity = arity;
  a.initial = initial;
  a.accepting = std::move(accepting);
  a.next.assign(states, std::vector<int>(alphabet_size(k, arity), sink));
  return a;
}

}  // namespace

Dfa a_zero(int k) {
  check_base(k);
  Dfa a = shell(k, 1, 2, 0, {true, false}, 1);
  a.next[0][0] = 0;
  return a;
}

Dfa a_succ(int k) {
  check_base(k);
  Dfa a = shell(k, 2, 3, 0, {false, true, false}, 2);
  auto code = [&](int x, int y) { return letter_code(k, {{x, y}}); };
  a.next[0][code(k - 1, 0)] = 0;
  for (int d = 0; d + 1 < k; ++d) a.next[0][code(d, d + 1)] = 1;
  for (int d = 0; d < k; ++d) a.next[1][code(d, d)] = 1;
  return a;
}

Dfa a_plus(int k) {
  check_base(k);
  Dfa a = shell(k, 3, 3, 0, {true, false, false}, 2);
  auto code = [&](int x, int y, int z) { return letter_code(k, {{x, y, z}}); };
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      int s = x + y;
      if (s < k)
        a.next[0][code(x, y, s)] = 0;
      else
        a.next[0][code(x, y, s - k)] = 1;
      if (s + 1 < k)
        a.next[1][code(x, y, s + 1)] = 0;
      else
        a.next[1][code(x, y, s + 1 - k)] = 1;
    }
  return a;
}

Dfa a_v(int k) {
  check_base(k);
  Dfa a = shell(k, 2, 3, 0, {true, true, false}, 2);
  auto code = [&](int x, int y) { return letter_code(k, {{x, y}}); };
  a.next[0][code(0, 0)] = 0;
  for (int d = 1; d < k; ++d) a.next[0][code(d, 1)] = 1;
  for (int d = 0; d < k; ++d) a.next[1][code(d, 0)] = 1;
  return a;
}

Dfa a_le(int k) {
  check_base(k);
  Dfa a = shell(k, 2, 2, 0, {true, false}, 0);
  auto code = [&](int x, int y) { return letter_code(k, {{x, y}}); };
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      a.next[0][code(x, y)] = x <= y ? 0 : 1;
      a.next[1][code(x, y)] = x >= y ? 1 : 0;
    }
  return a;
}

Dfa a_eq(int k) {
  check_base(k);
  Dfa a = shell(k, 2, 2, 0, {true, false}, 1);
  for (int d = 0; d < k; ++d) a.next[0][letter_code(k, {{d, d}})] = 0;
  return a;
}

}  // namespace ba
