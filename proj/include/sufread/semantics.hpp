#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sufread/automata.hpp"

namespace sufread {

/// One DSA move: `consumed` is the input read at the source state, ending
/// with the fired transition's label.
struct Move {
  Transition transition;
  Word consumed;
};

struct Run {
  std::vector<Move> moves;
  Word residue;
  StateId final_state = 0;
  bool accepted = false;
};

/// Reads `w` from `q` until the first position where some out-label of `q`
/// is a suffix of the input read so far, then fires the longest such label.
/// Returns the move and the unread remainder, or nothing if no position triggers.
std::optional<std::pair<Move, Word>> dsa_step(const Dsa& a, StateId q, WordView w);

Run dsa_run(const Dsa& a, WordView w);
bool dsa_accepts(const Dsa& a, WordView w);

/// Final state, or nothing when a partial DFA gets stuck.
std::optional<StateId> dfa_run(const Dfa& m, WordView w);
bool dfa_accepts(const Dfa& m, WordView w);

}  // namespace sufread
