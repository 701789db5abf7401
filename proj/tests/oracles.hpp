#pragma once

// Reference implementations used as test oracles. They are written directly
// from the definitions and deliberately share no code with the library beyond
// the plain data types.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "sufread/automata.hpp"

namespace oracle {

using sufread::Dfa;
using sufread::Dsa;
using sufread::StateId;
using sufread::Symbol;
using sufread::Word;

inline bool ends_with(const Word& w, std::size_t end, const Word& label) {
  if (label.size() > end) return false;
  return std::equal(label.begin(), label.end(), w.begin() + static_cast<long>(end - label.size()));
}

/// DSA acceptance straight from the move definition: at each state, scan the
/// input forward and fire the longest label ending at the first position
/// where any label ends.
inline bool dsa_accepts(const Dsa& a, const Word& w) {
  StateId q = a.initial;
  std::size_t start = 0;
  while (start < w.size()) {
    bool moved = false;
    for (std::size_t end = start + 1; end <= w.size() && !moved; ++end) {
      const sufread::Transition* best = nullptr;
      for (const auto& t : a.transitions) {
        if (t.source != q || t.label.size() > end - start) continue;
        if (!ends_with(w, end, t.label)) continue;
        if (best == nullptr || t.label.size() > best->label.size()) best = &t;
      }
      if (best != nullptr) {
        q = best->target;
        start = end;
        moved = true;
      }
    }
    if (!moved) return false;  // non-empty residue
  }
  return std::find(a.accepting.begin(), a.accepting.end(), q) != a.accepting.end();
}

inline bool dfa_accepts(const Dfa& m, const Word& w) {
  StateId q = m.initial;
  for (Symbol s : w) {
    q = m.delta[static_cast<std::size_t>(q) * m.alphabet.size() + s];
    if (q < 0) return false;
  }
  return std::find(m.accepting.begin(), m.accepting.end(), q) != m.accepting.end();
}

/// Every word over `k` symbols of length at most `max_len`, shortest first.
inline std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Symbol s = 0; s < k; ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

/// First word up to `max_len` on which the two acceptors disagree.
inline std::optional<Word> disagreement(std::size_t k, std::size_t max_len,
                                        const std::function<bool(const Word&)>& f,
                                        const std::function<bool(const Word&)>& g) {
  for (const auto& w : all_words(k, max_len)) {
    if (f(w) != g(w)) return w;
  }
  return std::nullopt;
}

/// Renders a word over a character alphabet as a plain string.
inline std::string text(const sufread::Alphabet& alphabet, const Word& w) {
  std::string s;
  for (Symbol x : w) s += alphabet.token(x);
  return s;
}

/// Regular-expression acceptor over a character alphabet.
inline std::function<bool(const Word&)> regex_language(const sufread::Alphabet& alphabet,
                                                       const std::string& pattern) {
  auto re = std::make_shared<std::regex>(pattern);
  return [re, alphabet](const Word& w) { return std::regex_match(text(alphabet, w), *re); };
}

/// Simple words from `p` by brute force over all words of length at most
/// |Q|: follow each word and keep it when every intermediate state avoids S,
/// the intermediates are pairwise distinct, and none equals an endpoint.
inline std::map<Word, StateId> simple_words(const Dfa& m, const std::vector<StateId>& s, StateId p) {
  const auto in_s = [&](StateId x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  std::map<Word, StateId> out;
  for (const auto& w : all_words(m.alphabet.size(), m.num_states())) {
    if (w.empty()) continue;
    std::vector<StateId> path{p};
    for (Symbol a : w) path.push_back(m.delta[static_cast<std::size_t>(path.back()) * m.alphabet.size() + a]);
    const StateId end = path.back();
    bool ok = true;
    std::set<StateId> seen;
    for (std::size_t i = 1; i + 1 < path.size() && ok; ++i) {
      const StateId x = path[i];
      ok = !in_s(x) && x != p && x != end && seen.insert(x).second;
    }
    if (ok) out[w] = end;
  }
  return out;
}

/// Number of residual languages among the reachable states of a complete
/// DFA, distinguishing states by every word of length below |Q|.
inline std::size_t residual_count(const Dfa& m) {
  std::set<StateId> reach{m.initial};
  std::vector<StateId> stack{m.initial};
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      const StateId t = m.delta[static_cast<std::size_t>(q) * m.alphabet.size() + a];
      if (reach.insert(t).second) stack.push_back(t);
    }
  }
  const auto words = all_words(m.alphabet.size(), m.num_states());
  std::set<std::vector<bool>> signatures;
  for (StateId q : reach) {
    Dfa from = m;
    from.initial = q;
    std::vector<bool> sig;
    for (const auto& w : words) sig.push_back(dfa_accepts(from, w));
    signatures.insert(sig);
  }
  return signatures.size();
}

/// Subsets of {0..n-1} that touch every edge.
inline std::vector<std::uint64_t> vertex_covers(std::size_t n,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool cover = true;
    for (auto [u, v] : edges) cover = cover && (((mask >> u) & 1) || ((mask >> v) & 1));
    if (cover) out.push_back(mask);
  }
  return out;
}

}  // namespace oracle
