#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sufread/automata.hpp"
#include "sufread/derivation.hpp"

namespace sufread {

/// Label `alpha` of `state` is a suffix of `prefix`, a proper prefix of the
/// sibling label `beta`, so `beta` can never fire.
struct DsaWfViolation {
  StateId state = 0;
  Word alpha;
  Word beta;
  Word prefix;
};

std::vector<DsaWfViolation> dsa_well_formedness_violations(const Dsa& a, bool stop_at_first = false);
inline bool is_dsa_well_formed(const Dsa& a) {
  return dsa_well_formedness_violations(a, true).empty();
}

/// Non-empty prefix `alpha_prefix` of `alpha` is a suffix of the non-empty
/// proper prefix `beta_prefix` of a different label `beta` of `state`.
struct StrongViolation {
  StateId state = 0;
  Word alpha;
  Word beta;
  Word alpha_prefix;
  Word beta_prefix;
};

std::vector<StrongViolation> strong_violations(const Dsa& a, bool stop_at_first = false);
inline bool is_strong(const Dsa& a) { return strong_violations(a, true).empty(); }

/// Residual languages of two DSA states, compared on the tracking DFA.
bool dsa_residual_equiv(const Dsa& a, StateId q1, StateId q2);

struct StrongMinResult {
  Dsa dsa;
  StateSet states;  // states of the canonical DFA that were kept
  Dfa canonical;
  /// Every strong derived DSA of minimum total, pairwise non-isomorphic
  /// (filled only on request).
  std::vector<Dsa> all_minima;
};

/// Smallest strong DSA derivable from the canonical DFA of `m`.
StrongMinResult minimize_strong(const Dfa& m, bool all_minima = false,
                                const EnumerateOptions& options = {});

struct BruteForceOptions {
  std::size_t max_total = 10;
  bool strong_only = false;
  /// Return every minimum (they come out pairwise non-isomorphic).
  bool collect_all = false;
};

struct MinimalityCertificate {
  std::optional<Dsa> automaton;
  std::size_t total = 0;  // total of `automaton`; 0 if none found
  std::size_t search_bound = 0;
  /// Every candidate up to the bound (or up to `total` when found) was checked.
  bool exhausted = false;
  std::vector<Dsa> all_minima;
  std::size_t candidates = 0;
};

/// Searches all DSAs over the alphabet of `language` in increasing total size,
/// up to renaming, for one accepting the same language. Only well-formed
/// candidates whose states are all reachable are tried, since any other DSA
/// has a strictly smaller equivalent. Throws GuardExceeded for alphabets
/// above 3 symbols or bounds above 10.
MinimalityCertificate brute_force_min_dsa(const Dfa& language, const BruteForceOptions& options);

}  // namespace sufread
