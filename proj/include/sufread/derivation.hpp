#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sufread/automata.hpp"

namespace sufread {

inline constexpr std::size_t kDefaultCap = 10000;

/// Sorted, duplicate-free set of DFA states.
using StateSet = std::vector<StateId>;

/// Builds a StateSet from state names. Throws UnknownState.
StateSet make_state_set(const Dfa& m, const std::vector<std::string>& names);

/// Simple words leaving one state `source`: labels of paths whose
/// intermediate states avoid S and are pairwise distinct and distinct from
/// the endpoints. Only the two endpoints may coincide.
struct SimpleWordTable {
  StateId source = 0;
  /// Each word determines its path, so endpoints form a function of the word.
  std::unordered_map<Word, StateId, WordHash> endpoint;
  /// Words grouped by endpoint, shortlex sorted.
  std::map<StateId, std::vector<Word>> by_target;

  std::size_t size() const noexcept { return endpoint.size(); }
};

/// All simple words from `p` modulo S. Throws CapExceeded when more than
/// `cap` words exist, PreconditionError when `m` is incomplete.
SimpleWordTable sp_from(const Dfa& m, const StateSet& s, StateId p, std::size_t cap = kDefaultCap);
/// Words of sp_from(p) ending at `q`.
std::vector<Word> simple_words(const Dfa& m, const StateSet& s, StateId p, StateId q,
                               std::size_t cap = kDefaultCap);
/// Restriction of sp_from(p) to endpoints inside S.
std::map<StateId, std::vector<Word>> out_mod(const Dfa& m, const StateSet& s, StateId p,
                                             std::size_t cap = kDefaultCap);

/// A DFA edge from..symbol..to that fails suffix-compatibility, witnessed
/// by `sigma` in SP(p ↝ from). `found` is the longest simple-word suffix of
/// sigma·symbol (if any) and `found_target` its endpoint.
struct Incompatibility {
  StateId from = 0;
  Symbol symbol = 0;
  StateId to = 0;
  StateId p = 0;
  Word sigma;
  std::optional<Word> found;
  StateId found_target = kNoState;
};

/// alpha ∈ SP(p ↝ q), q ∈ S, is a suffix of beta ∈ SP(p ↝ q_out), q_out ∉ S.
struct WellFormednessViolation {
  StateId p = 0;
  StateId q = 0;
  StateId q_out = 0;
  Word alpha;
  Word beta;
};

struct DerivationReport {
  std::vector<StateId> missing_required;  // initial/accepting states absent from S
  std::vector<Incompatibility> incompatible;
  std::vector<WellFormednessViolation> wf_violations;
  bool is_suffix_tracking = false;
};

/// Edge (q, a, u) checked for suffix-compatibility. Trivially
/// compatible when q or u lies in S. Returns the first failing witness.
std::optional<Incompatibility> check_suffix_compatible(const Dfa& m, const StateSet& s, StateId q,
                                                       Symbol a, std::size_t cap = kDefaultCap);
inline bool is_suffix_compatible(const Dfa& m, const StateSet& s, StateId q, Symbol a,
                                 std::size_t cap = kDefaultCap) {
  return !check_suffix_compatible(m, s, q, a, cap).has_value();
}

std::vector<WellFormednessViolation> well_formedness_violations(const Dfa& m, const StateSet& s,
                                                                std::size_t cap = kDefaultCap,
                                                                bool stop_at_first = false);
inline bool is_well_formed_set(const Dfa& m, const StateSet& s, std::size_t cap = kDefaultCap) {
  return well_formedness_violations(m, s, cap, true).empty();
}

/// Full report. With `stop_at_first` the check returns as soon as S is known
/// not to be suffix-tracking.
DerivationReport is_suffix_tracking(const Dfa& m, const StateSet& s, std::size_t cap = kDefaultCap,
                                    bool stop_at_first = false);

/// DSA on S whose transitions are the simple words between members of S.
/// Throws PreconditionError for a non-suffix-tracking S unless
/// `allow_non_tracking` is set.
Dsa induced_dsa(const Dfa& m, const StateSet& s, bool allow_non_tracking = false,
                std::size_t cap = kDefaultCap);

enum class TransitionKind { kPlain, kUselessBiggerSuffix, kUsefulBiggerSuffix, kUselessSelfLoop };

std::string_view to_string(TransitionKind kind);

/// Bigger-suffix: some other label with the same target is a proper suffix
/// of the label. Such a transition is useless when the longest out-label that
/// is a proper suffix of its label also leads to the same target, so removing
/// it never changes which target a run reaches.
/// Useless self-loop: non-accepting source, and no non-empty suffix of the
/// label begins an out-label of the state (the label matching itself aside).
TransitionKind classify_transition(const Dsa& a, const Transition& t);

struct RemoveOptions {
  /// Compare languages after every single removal; throws std::logic_error
  /// on a change.
  bool verify_each_step = false;
};

/// Removes useless bigger-suffix transitions, then useless self-loops (one
/// at a time, re-running the first phase after each), then states no longer
/// reachable. Throws PreconditionError if `a` is not a well-formed DSA.
Dsa remove_useless(const Dsa& a, const RemoveOptions& options = {});

/// remove_useless(induced_dsa(m, s)).
Dsa derive(const Dfa& m, const StateSet& s, std::size_t cap = kDefaultCap,
           const RemoveOptions& options = {});

struct EnumerateOptions {
  std::size_t limit = 0;            // 0: unlimited
  std::size_t max_cardinality = 0;  // 0: all
  std::size_t max_states = 20;
  std::size_t cap = kDefaultCap;
};

/// Subsets containing the initial and accepting states, by increasing size
/// and then lexicographically by member ids; `visit` receives the
/// suffix-tracking ones and returns false to stop. Throws GuardExceeded.
void for_each_suffix_tracking_set(const Dfa& m, const EnumerateOptions& options,
                                  const std::function<bool(const StateSet&)>& visit);
std::vector<StateSet> enumerate_suffix_tracking_sets(const Dfa& m,
                                                     const EnumerateOptions& options = {});

struct DerivedResult {
  Dsa dsa;
  StateSet states;
};

/// Smallest derive(m, S) over all suffix-tracking S; ties go to fewer states,
/// then to the lexicographically smaller serialization.
DerivedResult derive_smallest(const Dfa& m, const EnumerateOptions& options = {});

/// Shared tie-break for "smallest DSA" searches.
bool smaller_dsa(const Dsa& x, const Dsa& y);

}  // namespace sufread
