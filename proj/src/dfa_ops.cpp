#include "sufread/dfa_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sufread/errors.hpp"
#include "sufread/tracking.hpp"

namespace sufread {

namespace {

std::vector<bool> reachable(const Dfa& m) {
  std::vector<bool> seen(m.num_states(), false);
  std::deque<StateId> queue{m.initial};
  seen[m.initial] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      StateId t = m.next(s, a);
      if (t != kNoState && !seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

std::string unique_name(const std::vector<std::string>& names, std::string base) {
  while (std::find(names.begin(), names.end(), base) != names.end()) base += "_";
  return base;
}

}  // namespace

Dfa complete(const Dfa& m) {
  if (m.is_complete()) return m;
  Dfa out = m;
  const auto sink = static_cast<StateId>(out.num_states());
  out.names.push_back(unique_name(out.names, "sink"));
  out.delta.resize(out.names.size() * out.alphabet.size(), kNoState);
  for (auto& t : out.delta) {
    if (t == kNoState) t = sink;
  }
  return out;
}

Dfa trim_unreachable(const Dfa& m) {
  auto keep = reachable(m);
  std::vector<StateId> id(m.num_states(), kNoState);
  std::vector<std::string> names;
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (keep[s]) {
      id[s] = static_cast<StateId>(names.size());
      names.push_back(m.names[s]);
    }
  }
  Dfa out = Dfa::with_states(m.alphabet, std::move(names));
  out.initial = id[m.initial];
  for (StateId f : m.accepting) {
    if (keep[f]) out.accepting.push_back(id[f]);
  }
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (!keep[s]) continue;
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      StateId t = m.next(static_cast<StateId>(s), a);
      out.next(id[s], a) = t == kNoState ? kNoState : id[t];
    }
  }
  return out;
}

std::vector<int> nerode_blocks(const Dfa& m) {
  if (!m.is_complete()) throw PreconditionError("minimization requires a complete DFA");
  const std::size_t n = m.num_states();
  const std::size_t k = m.alphabet.size();
  std::vector<int> block(n);
  for (std::size_t s = 0; s < n; ++s) block[s] = m.is_accepting(static_cast<StateId>(s)) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.reserve(k + 1);
      sig.push_back(block[s]);
      for (Symbol a = 0; a < k; ++a) sig.push_back(block[m.next(static_cast<StateId>(s), a)]);
      auto [it, inserted] = ids.try_emplace(std::move(sig), static_cast<int>(ids.size()));
      next[s] = it->second;
    }
    block.swap(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  return block;
}

Minimized minimize(const Dfa& m) {
  auto block = nerode_blocks(m);
  const std::size_t k = m.alphabet.size();
  auto live = reachable(m);

  // Representative of each block: its smallest reachable member.
  std::map<int, StateId> rep;
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (live[s] && !rep.count(block[s])) rep[block[s]] = static_cast<StateId>(s);
  }

  std::map<int, StateId> block_id;
  std::vector<int> order;
  std::deque<int> queue{block[m.initial]};
  block_id[block[m.initial]] = 0;
  while (!queue.empty()) {
    int b = queue.front();
    queue.pop_front();
    order.push_back(b);
    for (Symbol a = 0; a < k; ++a) {
      int c = block[m.next(rep.at(b), a)];
      if (!block_id.count(c)) {
        block_id[c] = static_cast<StateId>(block_id.size());
        queue.push_back(c);
      }
    }
  }

  std::vector<std::string> names;
  for (int b : order) names.push_back(m.names[rep.at(b)]);
  Minimized out{Dfa::with_states(m.alphabet, std::move(names)), {}};
  out.dfa.initial = 0;
  for (int b : order) {
    StateId r = rep.at(b);
    StateId id = block_id.at(b);
    if (m.is_accepting(r)) out.dfa.accepting.push_back(id);
    for (Symbol a = 0; a < k; ++a) out.dfa.next(id, a) = block_id.at(block[m.next(r, a)]);
  }
  canonicalize_accepting(out.dfa.accepting);

  out.classes.block = block;
  out.classes.num_blocks = 1 + static_cast<std::size_t>(*std::max_element(block.begin(), block.end()));
  out.classes.state_map.assign(m.num_states(), kNoState);
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    auto it = block_id.find(block[s]);
    if (it != block_id.end()) out.classes.state_map[s] = it->second;
  }
  return out;
}

EquivResult dfa_equiv(const Dfa& m1, const Dfa& m2) {
  if (!(m1.alphabet == m2.alphabet)) throw AlphabetMismatch("automata use different alphabets");
  const Dfa a = complete(m1);
  const Dfa b = complete(m2);
  const std::size_t k = a.alphabet.size();
  const std::size_t nb = b.num_states();
  auto key = [nb](StateId x, StateId y) { return static_cast<std::size_t>(x) * nb + y; };

  struct Parent {
    std::size_t from;
    Symbol via;
  };
  std::vector<bool> seen(a.num_states() * nb, false);
  std::vector<Parent> parent(a.num_states() * nb);
  std::deque<std::pair<StateId, StateId>> queue{{a.initial, b.initial}};
  seen[key(a.initial, b.initial)] = true;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (a.is_accepting(x) != b.is_accepting(y)) {
      Word w;
      std::size_t cur = key(x, y);
      const std::size_t root = key(a.initial, b.initial);
      while (cur != root) {
        w.push_back(parent[cur].via);
        cur = parent[cur].from;
      }
      std::reverse(w.begin(), w.end());
      return {false, std::move(w)};
    }
    for (Symbol s = 0; s < k; ++s) {
      StateId x2 = a.next(x, s);
      StateId y2 = b.next(y, s);
      std::size_t kk = key(x2, y2);
      if (!seen[kk]) {
        seen[kk] = true;
        parent[kk] = {key(x, y), s};
        queue.emplace_back(x2, y2);
      }
    }
  }
  return {true, std::nullopt};
}

std::optional<std::vector<StateId>> dfa_isomorphic(const Dfa& m1, const Dfa& m2) {
  if (!(m1.alphabet == m2.alphabet) || m1.num_states() != m2.num_states()) return std::nullopt;
  const std::size_t n = m1.num_states();
  std::vector<StateId> fwd(n, kNoState), back(n, kNoState);
  std::deque<StateId> queue{m1.initial};
  fwd[m1.initial] = m2.initial;
  back[m2.initial] = m1.initial;
  std::size_t mapped = 1;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    StateId t = fwd[s];
    if (m1.is_accepting(s) != m2.is_accepting(t)) return std::nullopt;
    for (Symbol a = 0; a < m1.alphabet.size(); ++a) {
      StateId s2 = m1.next(s, a);
      StateId t2 = m2.next(t, a);
      if ((s2 == kNoState) != (t2 == kNoState)) return std::nullopt;
      if (s2 == kNoState) continue;
      if (fwd[s2] == kNoState && back[t2] == kNoState) {
        fwd[s2] = t2;
        back[t2] = s2;
        ++mapped;
        queue.push_back(s2);
      } else if (fwd[s2] != t2 || back[t2] != s2) {
        return std::nullopt;
      }
    }
  }
  if (mapped != n) return std::nullopt;
  return fwd;
}

EquivResult dsa_equiv(const Dsa& a1, const Dsa& a2) {
  return dfa_equiv(tracking_dfa(a1).dfa, tracking_dfa(a2).dfa);
}

std::optional<std::vector<StateId>> dsa_isomorphic(const Dsa& a1, const Dsa& a2) {
  if (!(a1.alphabet == a2.alphabet) || a1.num_states() != a2.num_states() ||
      a1.transitions.size() != a2.transitions.size()) {
    return std::nullopt;
  }
  const std::size_t n = a1.num_states();
  std::vector<std::map<Word, StateId>> out1(n), out2(n);
  for (const auto& t : a1.transitions) out1[t.source][t.label] = t.target;
  for (const auto& t : a2.transitions) out2[t.source][t.label] = t.target;

  std::vector<StateId> fwd(n, kNoState), back(n, kNoState);
  std::deque<StateId> queue{a1.initial};
  fwd[a1.initial] = a2.initial;
  back[a2.initial] = a1.initial;
  std::size_t mapped = 1;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    StateId t = fwd[s];
    if (a1.is_accepting(s) != a2.is_accepting(t)) return std::nullopt;
    if (out1[s].size() != out2[t].size()) return std::nullopt;
    for (const auto& [label, s2] : out1[s]) {
      auto it = out2[t].find(label);
      if (it == out2[t].end()) return std::nullopt;
      StateId t2 = it->second;
      if (fwd[s2] == kNoState && back[t2] == kNoState) {
        fwd[s2] = t2;
        back[t2] = s2;
        ++mapped;
        queue.push_back(s2);
      } else if (fwd[s2] != t2 || back[t2] != s2) {
        return std::nullopt;
      }
    }
  }
  // States unreachable by transitions cannot be matched structurally.
  if (mapped != n) return std::nullopt;
  return fwd;
}

bool residual_equiv(const Dfa& m, StateId s1, StateId s2) {
  auto block = nerode_blocks(m);
  return block.at(s1) == block.at(s2);
}

}  // namespace sufread
