#pragma once

#include <vector>

#include "sufread/automata.hpp"

namespace sufread {

/// Origin of a tracking-DFA state: either a DSA state plus the partial match
/// read there so far, or the per-state copy entered once input was consumed
/// without any partial match surviving.
struct TrackState {
  enum class Kind { kPair, kCopy };
  Kind kind = Kind::kPair;
  StateId dsa_state = 0;
  Word partial;  // empty for kCopy

  bool operator==(const TrackState&) const = default;
};

struct TrackingDfa {
  Dfa dfa;
  std::vector<TrackState> origin;  // indexed by DFA state
  std::vector<StateId> pair_eps;   // DSA state -> DFA state of Pair(q, ε)
  std::vector<StateId> copy;       // DSA state -> DFA state of Copy(q)
};

/// Complete DFA simulating `a`. Pair states exist for every prefix of every
/// out-label, reachable or not. Throws ValidationError for invalid input.
TrackingDfa tracking_dfa(const Dsa& a);

/// Tracking DFA has at most 2|A| states and total size at most 2|A|(1 + 2|Σ|).
bool tracking_size_bound_check(const Dsa& a);

}  // namespace sufread
