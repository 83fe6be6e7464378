#pragma once

#include "ba/automata.hpp"

namespace ba {

// The base-k relation automata. States are numbered q0 = 0, then q1 where
// present, with the absorbing sink last. All are total and padding closed.

/// L = 0*, i.e. {x : x = 0}. States {q0, sink}, q0 initial accepting.
Dfa a_zero(int k);

/// {(x, y) : S(x) = y}. States {q0, q1, sink}; q0 initial (carry pending),
/// q1 accepting (carry resolved).
Dfa a_succ(int k);

/// {(x, y, z) : x + y = z}. States {q0, q1, sink}; q0 initial accepting
/// (carry 0), q1 carry 1.
Dfa a_plus(int k);

/// {(x, y) : V_k(x) = y}. States {q0, q1, sink}; q0 initial accepting
/// (all zeros so far), q1 accepting (the power digit has been matched).
Dfa a_v(int k);

/// {(x, y) : x <= y}. States {q0, q1}; q0 initial accepting. Total with
/// no sink: the two states compare the prefixes read so far.
Dfa a_le(int k);

/// {(x, x)}. States {q0, sink}; q0 initial accepting, loops on (a, a).
Dfa a_eq(int k);

}  // namespace ba
