#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sufread/word.hpp"

namespace sufread {

/// Dense state index; names live in a parallel vector.
using StateId = std::int32_t;
inline constexpr StateId kNoState = -1;

/// Deterministic finite automaton with a possibly partial transition table.
struct Dfa {
  Alphabet alphabet;
  std::vector<std::string> names;
  StateId initial = 0;
  std::vector<StateId> accepting;  // sorted, unique
  /// Row-major `num_states() x alphabet.size()` table; kNoState marks a missing edge.
  std::vector<StateId> delta;

  std::size_t num_states() const noexcept { return names.size(); }
  StateId next(StateId s, Symbol a) const {
    return delta[static_cast<std::size_t>(s) * alphabet.size() + a];
  }
  StateId& next(StateId s, Symbol a) {
    return delta[static_cast<std::size_t>(s) * alphabet.size() + a];
  }
  bool is_accepting(StateId s) const;
  bool is_complete() const;
  std::optional<StateId> find_state(std::string_view name) const;
  /// Throws UnknownState.
  StateId state(std::string_view name) const;

  /// Empty automaton over `alphabet` with the given states and no edges.
  static Dfa with_states(Alphabet alphabet, std::vector<std::string> names);
};

struct Transition {
  StateId source = 0;
  Word label;
  StateId target = 0;

  bool operator==(const Transition&) const = default;
};

/// Deterministic suffix-reading automaton: transitions carry non-empty words and
/// fire on the longest label that ends the input read so far.
struct Dsa {
  Alphabet alphabet;
  std::vector<std::string> names;
  StateId initial = 0;
  std::vector<StateId> accepting;  // sorted, unique
  std::vector<Transition> transitions;

  std::size_t num_states() const noexcept { return names.size(); }
  bool is_accepting(StateId s) const;
  std::optional<StateId> find_state(std::string_view name) const;
  StateId state(std::string_view name) const;
  /// Transitions leaving `q`, in canonical order once canonicalize() ran.
  std::vector<Transition> outgoing(StateId q) const;
};

/// Orders transitions by (source, label length, label, target) and
/// sorts/dedups the accepting list.
void canonicalize(Dsa& a);
void canonicalize_accepting(std::vector<StateId>& accepting);

/// Labels on the transitions leaving `q` (shortlex sorted). Throws UnknownState.
std::vector<Word> out_labels(const Dsa& a, StateId q);
/// All prefixes of out_labels(a, q), including the empty word.
std::vector<Word> out_prefix_closure(const Dsa& a, StateId q);

struct SizeMetrics {
  std::size_t n_states = 0;
  std::size_t n_edges = 0;
  std::size_t label_len = 0;
  std::size_t total = 0;

  bool operator==(const SizeMetrics&) const = default;
};

SizeMetrics size_metrics(const Dsa& a);
/// A DFA edge counts as a label of length 1.
SizeMetrics size_metrics(const Dfa& m);

enum class ViolationKind {
  kEmptyAlphabet,
  kNoStates,
  kDuplicateStateName,
  kInitial,
  kAccepting,
  kTableShape,
  kDanglingTarget,
  kUnknownSymbol,
  kEmptyLabel,
  kDanglingSource,
  kDeterminism,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

std::string_view to_string(ViolationKind kind);

std::vector<Violation> validate(const Dfa& m);
std::vector<Violation> validate(const Dsa& a);
/// Throws ValidationError naming the first violation.
void require_valid(const Dfa& m);
void require_valid(const Dsa& a);

/// A complete DFA read as a DSA with single-letter labels.
Dsa dfa_as_dsa(const Dfa& m);

}  // namespace sufread
