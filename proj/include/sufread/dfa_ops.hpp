#pragma once

#include <optional>
#include <vector>

#include "sufread/automata.hpp"

namespace sufread {

/// Nerode partition of a complete DFA. `block[s]` is the class of state `s`
/// (over all states, reachable or not); `state_map[s]` is the state of the
/// minimized DFA that `s` maps to, or kNoState when no reachable state shares
/// its residual language.
struct EquivClasses {
  std::vector<int> block;
  std::vector<StateId> state_map;
  std::size_t num_blocks = 0;
};

struct Minimized {
  Dfa dfa;
  EquivClasses classes;
};

/// Adds a single non-accepting sink and every missing edge. Complete input is
/// returned unchanged.
Dfa complete(const Dfa& m);

/// Reachable part of `m` only.
Dfa trim_unreachable(const Dfa& m);

/// Canonical minimal DFA. States are numbered breadth-first from the initial
/// state in symbol order; each is named after its smallest-id reachable member.
/// Throws PreconditionError for incomplete input.
Minimized minimize(const Dfa& m);

/// Nerode partition over all states (no reachability restriction).
std::vector<int> nerode_blocks(const Dfa& m);

struct EquivResult {
  bool equivalent = true;
  std::optional<Word> counterexample;  // shortest, present iff not equivalent
};

/// Throws AlphabetMismatch unless both alphabets are identical.
EquivResult dfa_equiv(const Dfa& m1, const Dfa& m2);

/// Bijection from states reachable in `m1` to states of `m2`, found by
/// synchronized BFS. Unreachable states must be absent in both.
std::optional<std::vector<StateId>> dfa_isomorphic(const Dfa& m1, const Dfa& m2);

EquivResult dsa_equiv(const Dsa& a1, const Dsa& a2);

/// Bijection of DSA states preserving initial, accepting, and labelled
/// transitions, or nothing.
std::optional<std::vector<StateId>> dsa_isomorphic(const Dsa& a1, const Dsa& a2);

/// Residual languages of `s1` and `s2` coincide. Requires a complete DFA.
bool residual_equiv(const Dfa& m, StateId s1, StateId s2);

}  // namespace sufread
