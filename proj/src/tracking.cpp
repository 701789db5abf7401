#include "sufread/tracking.hpp"

#include <map>
#include <set>
#include <string>

namespace sufread {

namespace {

std::string partial_name(const Alphabet& alphabet, const Word& w) {
  std::string out;
  const bool chars = alphabet.is_character_alphabet();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!chars && i > 0) out += '_';
    out += alphabet.token(w[i]);
  }
  return out;
}

}  // namespace

TrackingDfa tracking_dfa(const Dsa& a) {
  require_valid(a);
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet.size();

  TrackingDfa out;
  std::vector<std::vector<Word>> labels(n), closure(n);
  std::vector<std::map<Word, StateId>> label_target(n);
  std::vector<std::map<Word, StateId>> pair_id(n);
  std::vector<std::string> names;

  for (StateId q = 0; q < static_cast<StateId>(n); ++q) {
    labels[q] = out_labels(a, q);
    closure[q] = prefix_closure(labels[q]);
    for (const auto& beta : closure[q]) {
      pair_id[q][beta] = static_cast<StateId>(out.origin.size());
      out.origin.push_back({TrackState::Kind::kPair, q, beta});
      names.push_back(beta.empty() ? a.names[q]
                                   : a.names[q] + "." + partial_name(a.alphabet, beta));
    }
  }
  for (const auto& t : a.transitions) label_target[t.source][t.label] = t.target;
  out.copy.resize(n);
  out.pair_eps.resize(n);
  for (StateId q = 0; q < static_cast<StateId>(n); ++q) {
    out.pair_eps[q] = pair_id[q].at(Word{});
    out.copy[q] = static_cast<StateId>(out.origin.size());
    out.origin.push_back({TrackState::Kind::kCopy, q, {}});
    names.push_back(a.names[q] + ".copy");
  }

  // Display names can collide with DSA names containing dots; disambiguate by id.
  std::set<std::string> used;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!used.insert(names[i]).second) {
      names[i] += "_" + std::to_string(i);
      used.insert(names[i]);
    }
  }

  out.dfa = Dfa::with_states(a.alphabet, std::move(names));
  out.dfa.initial = out.pair_eps[a.initial];
  for (StateId f : a.accepting) out.dfa.accepting.push_back(out.pair_eps[f]);
  canonicalize_accepting(out.dfa.accepting);

  for (StateId s = 0; s < static_cast<StateId>(out.origin.size()); ++s) {
    const TrackState& ts = out.origin[s];
    const StateId q = ts.dsa_state;
    for (Symbol x = 0; x < k; ++x) {
      Word read = ts.partial;
      read.push_back(x);
      StateId dest;
      if (auto fired = longest_suffix_in(labels[q], read)) {
        dest = out.pair_eps[label_target[q].at(*fired)];
      } else {
        Word kept = *longest_suffix_in(closure[q], read);  // ε is always present
        dest = kept.empty() ? out.copy[q] : pair_id[q].at(kept);
      }
      out.dfa.next(s, x) = dest;
    }
  }
  return out;
}

bool tracking_size_bound_check(const Dsa& a) {
  const auto m = tracking_dfa(a);
  const std::size_t size_a = size_metrics(a).total;
  const std::size_t sigma = a.alphabet.size();
  const auto sm = size_metrics(m.dfa);
  return sm.n_states <= 2 * size_a && sm.total <= 2 * size_a * (1 + 2 * sigma);
}

}  // namespace sufread
