#include "sufread/automata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sufread/errors.hpp"

namespace sufread {

namespace {

std::optional<StateId> find_name(const std::vector<std::string>& names, std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<StateId>(i);
  }
  return std::nullopt;
}

bool contains_sorted(const std::vector<StateId>& v, StateId s) {
  return std::binary_search(v.begin(), v.end(), s);
}

std::string state_label(const std::vector<std::string>& names, StateId s) {
  if (s >= 0 && static_cast<std::size_t>(s) < names.size()) return names[s];
  return "#" + std::to_string(s);
}

void check_common(const Alphabet& alphabet, const std::vector<std::string>& names, StateId initial,
                  const std::vector<StateId>& accepting, std::vector<Violation>& out) {
  if (alphabet.empty()) out.push_back({ViolationKind::kEmptyAlphabet, "alphabet is empty"});
  if (names.empty()) out.push_back({ViolationKind::kNoStates, "automaton has no states"});
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      out.push_back({ViolationKind::kDuplicateStateName, "duplicate state name '" + n + "'"});
    }
  }
  const auto n = static_cast<StateId>(names.size());
  if (initial < 0 || initial >= n) {
    out.push_back({ViolationKind::kInitial,
                   "initial state " + std::to_string(initial) + " is not declared"});
  }
  for (StateId s : accepting) {
    if (s < 0 || s >= n) {
      out.push_back({ViolationKind::kAccepting,
                     "accepting state " + std::to_string(s) + " is not declared"});
    }
  }
}

}  // namespace

bool Dfa::is_accepting(StateId s) const { return contains_sorted(accepting, s); }

bool Dfa::is_complete() const {
  return std::none_of(delta.begin(), delta.end(), [](StateId t) { return t == kNoState; });
}

std::optional<StateId> Dfa::find_state(std::string_view name) const {
  return find_name(names, name);
}

StateId Dfa::state(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw UnknownState("unknown state '" + std::string(name) + "'");
}

Dfa Dfa::with_states(Alphabet alphabet, std::vector<std::string> names) {
  Dfa m;
  m.alphabet = std::move(alphabet);
  m.names = std::move(names);
  m.delta.assign(m.names.size() * m.alphabet.size(), kNoState);
  return m;
}

bool Dsa::is_accepting(StateId s) const { return contains_sorted(accepting, s); }

std::optional<StateId> Dsa::find_state(std::string_view name) const {
  return find_name(names, name);
}

StateId Dsa::state(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw UnknownState("unknown state '" + std::string(name) + "'");
}

std::vector<Transition> Dsa::outgoing(StateId q) const {
  std::vector<Transition> out;
  for (const auto& t : transitions) {
    if (t.source == q) out.push_back(t);
  }
  return out;
}

void canonicalize_accepting(std::vector<StateId>& accepting) {
  std::sort(accepting.begin(), accepting.end());
  accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
}

void canonicalize(Dsa& a) {
  canonicalize_accepting(a.accepting);
  std::sort(a.transitions.begin(), a.transitions.end(),
            [](const Transition& x, const Transition& y) {
              if (x.source != y.source) return x.source < y.source;
              if (x.label != y.label) return shortlex_less(x.label, y.label);
              return x.target < y.target;
            });
}

std::vector<Word> out_labels(const Dsa& a, StateId q) {
  if (q < 0 || static_cast<std::size_t>(q) >= a.num_states()) {
    throw UnknownState("unknown state id " + std::to_string(q));
  }
  std::vector<Word> labels;
  for (const auto& t : a.transitions) {
    if (t.source == q) labels.push_back(t.label);
  }
  std::sort(labels.begin(), labels.end(), ShortlexLess{});
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::vector<Word> out_prefix_closure(const Dsa& a, StateId q) {
  return prefix_closure(out_labels(a, q));
}

SizeMetrics size_metrics(const Dsa& a) {
  SizeMetrics m;
  m.n_states = a.num_states();
  m.n_edges = a.transitions.size();
  for (const auto& t : a.transitions) m.label_len += t.label.size();
  m.total = m.n_states + m.n_edges + m.label_len;
  return m;
}

SizeMetrics size_metrics(const Dfa& dfa) {
  SizeMetrics m;
  m.n_states = dfa.num_states();
  m.n_edges = static_cast<std::size_t>(
      std::count_if(dfa.delta.begin(), dfa.delta.end(), [](StateId t) { return t != kNoState; }));
  m.label_len = m.n_edges;
  m.total = m.n_states + m.n_edges + m.label_len;
  return m;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyAlphabet: return "empty-alphabet";
    case ViolationKind::kNoStates: return "no-states";
    case ViolationKind::kDuplicateStateName: return "duplicate-state-name";
    case ViolationKind::kInitial: return "initial";
    case ViolationKind::kAccepting: return "accepting";
    case ViolationKind::kTableShape: return "table-shape";
    case ViolationKind::kDanglingTarget: return "dangling-target";
    case ViolationKind::kUnknownSymbol: return "unknown-symbol";
    case ViolationKind::kEmptyLabel: return "empty-label";
    case ViolationKind::kDanglingSource: return "dangling-source";
    case ViolationKind::kDeterminism: return "determinism";
  }
  return "unknown";
}

std::vector<Violation> validate(const Dfa& m) {
  std::vector<Violation> out;
  check_common(m.alphabet, m.names, m.initial, m.accepting, out);
  if (m.delta.size() != m.num_states() * m.alphabet.size()) {
    out.push_back({ViolationKind::kTableShape, "transition table has wrong dimensions"});
    return out;
  }
  const auto n = static_cast<StateId>(m.num_states());
  for (StateId s = 0; s < n; ++s) {
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      StateId t = m.next(s, a);
      if (t != kNoState && (t < 0 || t >= n)) {
        out.push_back({ViolationKind::kDanglingTarget,
                       "edge " + m.names[s] + " " + m.alphabet.token(a) + " -> #" +
                           std::to_string(t) + " targets an undeclared state"});
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const Dsa& a) {
  std::vector<Violation> out;
  check_common(a.alphabet, a.names, a.initial, a.accepting, out);
  const auto n = static_cast<StateId>(a.num_states());
  std::map<std::pair<StateId, Word>, std::size_t> seen;
  for (const auto& t : a.transitions) {
    std::string where = state_label(a.names, t.source) + " -> " + state_label(a.names, t.target);
    if (t.source < 0 || t.source >= n) {
      out.push_back({ViolationKind::kDanglingSource, "transition " + where + " has undeclared source"});
    }
    if (t.target < 0 || t.target >= n) {
      out.push_back({ViolationKind::kDanglingTarget, "transition " + where + " has undeclared target"});
    }
    if (t.label.empty()) {
      out.push_back({ViolationKind::kEmptyLabel, "transition " + where + " has an empty label"});
      continue;
    }
    bool bad_symbol = false;
    for (Symbol s : t.label) {
      if (s >= a.alphabet.size()) bad_symbol = true;
    }
    if (bad_symbol) {
      out.push_back({ViolationKind::kUnknownSymbol,
                     "transition " + where + " uses a symbol outside the alphabet"});
      continue;
    }
    if (++seen[{t.source, t.label}] == 2) {
      out.push_back({ViolationKind::kDeterminism,
                     "state " + state_label(a.names, t.source) + " has two transitions labeled " +
                         format_word(a.alphabet, t.label)});
    }
  }
  return out;
}

void require_valid(const Dfa& m) {
  auto v = validate(m);
  if (!v.empty()) throw ValidationError("invalid DFA: " + v.front().message);
}

void require_valid(const Dsa& a) {
  auto v = validate(a);
  if (!v.empty()) throw ValidationError("invalid DSA: " + v.front().message);
}

Dsa dfa_as_dsa(const Dfa& m) {
  Dsa a;
  a.alphabet = m.alphabet;
  a.names = m.names;
  a.initial = m.initial;
  a.accepting = m.accepting;
  const auto n = static_cast<StateId>(m.num_states());
  for (StateId s = 0; s < n; ++s) {
    for (Symbol x = 0; x < m.alphabet.size(); ++x) {
      StateId t = m.next(s, x);
      if (t != kNoState) a.transitions.push_back({s, Word{x}, t});
    }
  }
  canonicalize(a);
  return a;
}

}  // namespace sufread
