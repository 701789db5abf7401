#include "sufread/derivation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "sufread/dfa_ops.hpp"
#include "sufread/errors.hpp"
#include "sufread/strong_min.hpp"
#include "sufread/text_format.hpp"

namespace sufread {

namespace {

void require_complete(const Dfa& m) {
  require_valid(m);
  if (!m.is_complete()) throw PreconditionError("operation requires a complete DFA");
}

std::vector<bool> membership(const Dfa& m, const StateSet& s) {
  std::vector<bool> in(m.num_states(), false);
  for (StateId x : s) {
    if (x < 0 || static_cast<std::size_t>(x) >= m.num_states()) {
      throw UnknownState("state id " + std::to_string(x) + " is not in the DFA");
    }
    in[x] = true;
  }
  return in;
}

class SimpleWordSearch {
 public:
  SimpleWordSearch(const Dfa& m, const std::vector<bool>& in_s, std::size_t cap)
      : m_(m), in_s_(in_s), cap_(cap), on_path_(m.num_states(), false) {}

  SimpleWordTable run(StateId p) {
    table_ = SimpleWordTable{};
    table_.source = p;
    p0_ = p;
    word_.clear();
    extend(p);
    for (const auto& [w, q] : table_.endpoint) table_.by_target[q].push_back(w);
    for (auto& [q, words] : table_.by_target) std::sort(words.begin(), words.end(), ShortlexLess{});
    return std::move(table_);
  }

 private:
  void record(StateId z) {
    if (table_.endpoint.size() >= cap_) throw CapExceeded(cap_);
    table_.endpoint.emplace(word_, z);
  }

  void extend(StateId y) {
    for (Symbol a = 0; a < m_.alphabet.size(); ++a) {
      StateId z = m_.next(y, a);
      word_.push_back(a);
      if (z == p0_) {
        record(z);
      } else if (!on_path_[z]) {
        record(z);
        if (!in_s_[z]) {
          on_path_[z] = true;
          extend(z);
          on_path_[z] = false;
        }
      }
      word_.pop_back();
    }
  }

  const Dfa& m_;
  const std::vector<bool>& in_s_;
  std::size_t cap_;
  std::vector<bool> on_path_;
  StateId p0_ = 0;
  Word word_;
  SimpleWordTable table_;
};

/// Simple-word tables for every member of S, computed once per check.
struct Tables {
  std::vector<bool> in_s;
  std::map<StateId, SimpleWordTable> from;

  Tables(const Dfa& m, const StateSet& s, std::size_t cap) : in_s(membership(m, s)) {
    SimpleWordSearch search(m, in_s, cap);
    for (StateId p : s) from.emplace(p, search.run(p));
  }
};

std::optional<Incompatibility> check_edge(const Dfa& m, const Tables& t, StateId q, Symbol a) {
  const StateId u = m.next(q, a);
  if (t.in_s[q] || t.in_s[u]) return std::nullopt;
  for (const auto& [p, table] : t.from) {
    auto group = table.by_target.find(q);
    if (group == table.by_target.end()) continue;
    for (const Word& sigma : group->second) {
      Word ext = sigma;
      ext.push_back(a);
      std::optional<Word> found;
      StateId found_target = kNoState;
      for (std::size_t start = 0; start < ext.size(); ++start) {
        Word suffix(ext.begin() + static_cast<std::ptrdiff_t>(start), ext.end());
        auto it = table.endpoint.find(suffix);
        if (it != table.endpoint.end()) {
          found = std::move(suffix);
          found_target = it->second;
          break;
        }
      }
      if (!found || found_target != u) {
        return Incompatibility{q, a, u, p, sigma, std::move(found), found_target};
      }
    }
  }
  return std::nullopt;
}

std::vector<WellFormednessViolation> wf_check(const Tables& t, bool stop_at_first) {
  std::vector<WellFormednessViolation> out;
  for (const auto& [p, table] : t.from) {
    for (const auto& [q_out, words] : table.by_target) {
      if (t.in_s[q_out]) continue;
      for (const Word& beta : words) {
        for (std::size_t start = 1; start < beta.size(); ++start) {
          Word alpha(beta.begin() + static_cast<std::ptrdiff_t>(start), beta.end());
          auto it = table.endpoint.find(alpha);
          if (it != table.endpoint.end() && t.in_s[it->second]) {
            out.push_back({p, it->second, q_out, std::move(alpha), beta});
            if (stop_at_first) return out;
          }
        }
      }
    }
  }
  return out;
}

using OutList = std::vector<std::pair<Word, StateId>>;

std::vector<TransitionKind> classify_state(const OutList& outs, StateId q, bool accepting) {
  std::unordered_map<Word, StateId, WordHash> target_of;
  std::unordered_map<Word, int, WordHash> prefix_count;
  for (const auto& [label, target] : outs) {
    target_of.emplace(label, target);
    for (std::size_t len = 1; len <= label.size(); ++len) {
      ++prefix_count[Word(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(len))];
    }
  }
  std::vector<TransitionKind> kinds;
  kinds.reserve(outs.size());
  for (const auto& [alpha, target] : outs) {
    std::optional<StateId> longest_target;
    bool bigger = false;
    for (std::size_t start = 1; start < alpha.size(); ++start) {
      auto it = target_of.find(Word(alpha.begin() + static_cast<std::ptrdiff_t>(start), alpha.end()));
      if (it == target_of.end()) continue;
      if (!longest_target) longest_target = it->second;
      if (it->second == target) bigger = true;
    }
    if (bigger) {
      kinds.push_back(*longest_target == target ? TransitionKind::kUselessBiggerSuffix
                                                : TransitionKind::kUsefulBiggerSuffix);
      continue;
    }
    bool self_loop_useless = target == q && !accepting;
    for (std::size_t start = 0; self_loop_useless && start < alpha.size(); ++start) {
      Word suffix(alpha.begin() + static_cast<std::ptrdiff_t>(start), alpha.end());
      auto it = prefix_count.find(suffix);
      int count = it == prefix_count.end() ? 0 : it->second;
      if (start == 0) --count;  // the label is trivially a prefix of itself
      if (count > 0) self_loop_useless = false;
    }
    kinds.push_back(self_loop_useless ? TransitionKind::kUselessSelfLoop : TransitionKind::kPlain);
  }
  return kinds;
}

Dsa assemble(const Dsa& shape, const std::vector<OutList>& outs) {
  Dsa a;
  a.alphabet = shape.alphabet;
  a.names = shape.names;
  a.initial = shape.initial;
  a.accepting = shape.accepting;
  for (StateId q = 0; q < static_cast<StateId>(outs.size()); ++q) {
    for (const auto& [label, target] : outs[q]) a.transitions.push_back({q, label, target});
  }
  canonicalize(a);
  return a;
}

Dsa drop_unreachable(const Dsa& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<StateId>> succ(n);
  for (const auto& t : a.transitions) succ[t.source].push_back(t.target);
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue{a.initial};
  seen[a.initial] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (StateId t : succ[s]) {
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  std::vector<StateId> id(n, kNoState);
  Dsa out;
  out.alphabet = a.alphabet;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) {
      id[s] = static_cast<StateId>(out.names.size());
      out.names.push_back(a.names[s]);
    }
  }
  out.initial = id[a.initial];
  for (StateId f : a.accepting) {
    if (seen[f]) out.accepting.push_back(id[f]);
  }
  for (const auto& t : a.transitions) {
    if (seen[t.source]) out.transitions.push_back({id[t.source], t.label, id[t.target]});
  }
  canonicalize(out);
  return out;
}

}  // namespace

StateSet make_state_set(const Dfa& m, const std::vector<std::string>& names) {
  StateSet s;
  for (const auto& n : names) s.push_back(m.state(n));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

SimpleWordTable sp_from(const Dfa& m, const StateSet& s, StateId p, std::size_t cap) {
  require_complete(m);
  auto in_s = membership(m, s);
  if (p < 0 || static_cast<std::size_t>(p) >= m.num_states()) {
    throw UnknownState("state id " + std::to_string(p) + " is not in the DFA");
  }
  return SimpleWordSearch(m, in_s, cap).run(p);
}

std::vector<Word> simple_words(const Dfa& m, const StateSet& s, StateId p, StateId q,
                               std::size_t cap) {
  if (q < 0 || static_cast<std::size_t>(q) >= m.num_states()) {
    throw UnknownState("state id " + std::to_string(q) + " is not in the DFA");
  }
  auto table = sp_from(m, s, p, cap);
  auto it = table.by_target.find(q);
  if (it == table.by_target.end()) return {};
  return it->second;
}

std::map<StateId, std::vector<Word>> out_mod(const Dfa& m, const StateSet& s, StateId p,
                                             std::size_t cap) {
  auto table = sp_from(m, s, p, cap);
  auto in_s = membership(m, s);
  std::map<StateId, std::vector<Word>> out;
  for (auto& [q, words] : table.by_target) {
    if (in_s[q]) out.emplace(q, std::move(words));
  }
  return out;
}

std::optional<Incompatibility> check_suffix_compatible(const Dfa& m, const StateSet& s, StateId q,
                                                       Symbol a, std::size_t cap) {
  require_complete(m);
  auto in_s = membership(m, s);
  if (q < 0 || static_cast<std::size_t>(q) >= m.num_states()) {
    throw UnknownState("state id " + std::to_string(q) + " is not in the DFA");
  }
  if (in_s[q] || in_s[m.next(q, a)]) return std::nullopt;
  Tables t(m, s, cap);
  return check_edge(m, t, q, a);
}

std::vector<WellFormednessViolation> well_formedness_violations(const Dfa& m, const StateSet& s,
                                                                std::size_t cap,
                                                                bool stop_at_first) {
  require_complete(m);
  Tables t(m, s, cap);
  return wf_check(t, stop_at_first);
}

DerivationReport is_suffix_tracking(const Dfa& m, const StateSet& s, std::size_t cap,
                                    bool stop_at_first) {
  require_complete(m);
  DerivationReport report;
  auto in_s = membership(m, s);
  if (!in_s[m.initial]) report.missing_required.push_back(m.initial);
  for (StateId f : m.accepting) {
    if (!in_s[f]) report.missing_required.push_back(f);
  }
  if (stop_at_first && !report.missing_required.empty()) return report;

  Tables t(m, s, cap);
  for (StateId q = 0; q < static_cast<StateId>(m.num_states()); ++q) {
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      if (auto bad = check_edge(m, t, q, a)) {
        report.incompatible.push_back(std::move(*bad));
        if (stop_at_first) return report;
      }
    }
  }
  report.wf_violations = wf_check(t, stop_at_first);
  report.is_suffix_tracking = report.missing_required.empty() && report.incompatible.empty() &&
                              report.wf_violations.empty();
  return report;
}

Dsa induced_dsa(const Dfa& m, const StateSet& s, bool allow_non_tracking, std::size_t cap) {
  require_complete(m);
  StateSet members = s;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!allow_non_tracking && !is_suffix_tracking(m, members, cap, true).is_suffix_tracking) {
    throw PreconditionError("state set is not suffix-tracking");
  }
  Tables t(m, members, cap);
  if (!t.in_s[m.initial]) throw PreconditionError("state set must contain the initial state");

  std::vector<StateId> id(m.num_states(), kNoState);
  Dsa a;
  a.alphabet = m.alphabet;
  for (StateId q : members) {
    id[q] = static_cast<StateId>(a.names.size());
    a.names.push_back(m.names[q]);
  }
  a.initial = id[m.initial];
  for (StateId f : m.accepting) {
    if (id[f] != kNoState) a.accepting.push_back(id[f]);
  }
  for (const auto& [p, table] : t.from) {
    for (const auto& [q, words] : table.by_target) {
      if (!t.in_s[q]) continue;
      for (const Word& w : words) a.transitions.push_back({id[p], w, id[q]});
    }
  }
  canonicalize(a);
  return a;
}

std::string_view to_string(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::kPlain: return "plain";
    case TransitionKind::kUselessBiggerSuffix: return "useless-bigger-suffix";
    case TransitionKind::kUsefulBiggerSuffix: return "useful-bigger-suffix";
    case TransitionKind::kUselessSelfLoop: return "useless-self-loop";
  }
  return "unknown";
}

TransitionKind classify_transition(const Dsa& a, const Transition& t) {
  OutList outs;
  std::size_t index = outs.size();
  bool present = false;
  for (const auto& u : a.transitions) {
    if (u.source != t.source) continue;
    if (u == t) {
      index = outs.size();
      present = true;
    }
    outs.emplace_back(u.label, u.target);
  }
  if (!present) throw PreconditionError("transition is not part of the automaton");
  return classify_state(outs, t.source, a.is_accepting(t.source))[index];
}

Dsa remove_useless(const Dsa& input, const RemoveOptions& options) {
  require_valid(input);
  if (!dsa_well_formedness_violations(input, true).empty()) {
    throw PreconditionError("useless-transition removal requires a well-formed DSA");
  }
  const std::size_t n = input.num_states();
  Dsa sorted = input;
  canonicalize(sorted);
  std::vector<OutList> outs(n);
  for (const auto& t : sorted.transitions) outs[t.source].emplace_back(t.label, t.target);
  std::vector<std::vector<TransitionKind>> kinds(n);
  auto refresh = [&](StateId q) { kinds[q] = classify_state(outs[q], q, input.is_accepting(q)); };
  for (StateId q = 0; q < static_cast<StateId>(n); ++q) refresh(q);

  // Deterministic pick: longest label, then smallest source, then smallest label.
  auto pick = [&](TransitionKind wanted) -> std::optional<std::pair<StateId, std::size_t>> {
    std::optional<std::pair<StateId, std::size_t>> best;
    for (StateId q = 0; q < static_cast<StateId>(n); ++q) {
      for (std::size_t i = 0; i < outs[q].size(); ++i) {
        if (kinds[q][i] != wanted) continue;
        if (!best) {
          best = {q, i};
          continue;
        }
        const Word& cur = outs[q][i].first;
        const Word& old = outs[best->first][best->second].first;
        // Scan order already is (source, label), so only a longer label wins.
        if (cur.size() > old.size()) best = {q, i};
      }
    }
    return best;
  };

  Dsa previous;
  if (options.verify_each_step) previous = assemble(input, outs);
  auto remove = [&](std::pair<StateId, std::size_t> at) {
    outs[at.first].erase(outs[at.first].begin() + static_cast<std::ptrdiff_t>(at.second));
    refresh(at.first);
    if (options.verify_each_step) {
      Dsa next = assemble(input, outs);
      if (!dsa_equiv(previous, next).equivalent) {
        throw std::logic_error("useless-transition removal changed the language");
      }
      previous = std::move(next);
    }
  };

  while (true) {
    while (auto at = pick(TransitionKind::kUselessBiggerSuffix)) remove(*at);
    auto loop = pick(TransitionKind::kUselessSelfLoop);
    if (!loop) break;
    remove(*loop);
  }
  return drop_unreachable(assemble(input, outs));
}

Dsa derive(const Dfa& m, const StateSet& s, std::size_t cap, const RemoveOptions& options) {
  return remove_useless(induced_dsa(m, s, false, cap), options);
}

void for_each_suffix_tracking_set(const Dfa& m, const EnumerateOptions& options,
                                  const std::function<bool(const StateSet&)>& visit) {
  require_complete(m);
  if (m.num_states() > options.max_states) {
    throw GuardExceeded("DFA has " + std::to_string(m.num_states()) +
                        " states; subset enumeration is limited to " +
                        std::to_string(options.max_states));
  }
  StateSet mandatory{m.initial};
  mandatory.insert(mandatory.end(), m.accepting.begin(), m.accepting.end());
  std::sort(mandatory.begin(), mandatory.end());
  mandatory.erase(std::unique(mandatory.begin(), mandatory.end()), mandatory.end());
  std::vector<StateId> optional;
  for (StateId q = 0; q < static_cast<StateId>(m.num_states()); ++q) {
    if (!std::binary_search(mandatory.begin(), mandatory.end(), q)) optional.push_back(q);
  }

  std::size_t yielded = 0;
  const std::size_t r = optional.size();
  for (std::size_t c = 0; c <= r; ++c) {
    if (options.max_cardinality != 0 && mandatory.size() + c > options.max_cardinality) return;
    std::vector<std::size_t> idx(c);
    for (std::size_t i = 0; i < c; ++i) idx[i] = i;
    while (true) {
      StateSet s = mandatory;
      for (std::size_t i : idx) s.push_back(optional[i]);
      std::sort(s.begin(), s.end());
      if (is_suffix_tracking(m, s, options.cap, true).is_suffix_tracking) {
        if (!visit(s)) return;
        if (options.limit != 0 && ++yielded >= options.limit) return;
      }
      // Next combination in lexicographic order.
      std::size_t i = c;
      while (i > 0 && idx[i - 1] == r - c + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < c; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

std::vector<StateSet> enumerate_suffix_tracking_sets(const Dfa& m, const EnumerateOptions& options) {
  std::vector<StateSet> out;
  for_each_suffix_tracking_set(m, options, [&](const StateSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool smaller_dsa(const Dsa& x, const Dsa& y) {
  const auto mx = size_metrics(x);
  const auto my = size_metrics(y);
  if (mx.total != my.total) return mx.total < my.total;
  if (mx.n_states != my.n_states) return mx.n_states < my.n_states;
  return serialize(x) < serialize(y);
}

DerivedResult derive_smallest(const Dfa& m, const EnumerateOptions& options) {
  std::optional<DerivedResult> best;
  for_each_suffix_tracking_set(m, options, [&](const StateSet& s) {
    Dsa d = remove_useless(induced_dsa(m, s, true, options.cap));
    if (!best || smaller_dsa(d, best->dsa)) best = DerivedResult{std::move(d), s};
    return true;
  });
  // The full state set is always suffix-tracking, so a result exists unless a limit cut the search.
  if (!best) throw PreconditionError("no suffix-tracking set was enumerated");
  return std::move(*best);
}

}  // namespace sufread
