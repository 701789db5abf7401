#include "sufread/semantics.hpp"

#include "sufread/errors.hpp"

namespace sufread {

std::optional<std::pair<Move, Word>> dsa_step(const Dsa& a, StateId q, WordView w) {
  if (q < 0 || static_cast<std::size_t>(q) >= a.num_states()) {
    throw UnknownState("unknown state id " + std::to_string(q));
  }
  std::vector<const Transition*> out;
  for (const auto& t : a.transitions) {
    if (t.source == q) out.push_back(&t);
  }
  if (out.empty()) return std::nullopt;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    WordView read = w.first(i);
    const Transition* best = nullptr;
    for (const Transition* t : out) {
      if (is_suffix(t->label, read) && (best == nullptr || t->label.size() > best->label.size())) {
        best = t;
      }
    }
    if (best != nullptr) {
      Move m{*best, Word(read.begin(), read.end())};
      return std::make_pair(std::move(m), Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()));
    }
  }
  return std::nullopt;
}

Run dsa_run(const Dsa& a, WordView w) {
  Run run;
  StateId q = a.initial;
  Word rest(w.begin(), w.end());
  while (!rest.empty()) {
    auto step = dsa_step(a, q, rest);
    if (!step) break;
    q = step->first.transition.target;
    run.moves.push_back(std::move(step->first));
    rest = std::move(step->second);
  }
  run.residue = std::move(rest);
  run.final_state = q;
  run.accepted = run.residue.empty() && a.is_accepting(q);
  return run;
}

bool dsa_accepts(const Dsa& a, WordView w) { return dsa_run(a, w).accepted; }

std::optional<StateId> dfa_run(const Dfa& m, WordView w) {
  StateId s = m.initial;
  for (Symbol x : w) {
    s = m.next(s, x);
    if (s == kNoState) return std::nullopt;
  }
  return s;
}

bool dfa_accepts(const Dfa& m, WordView w) {
  auto s = dfa_run(m, w);
  return s && m.is_accepting(*s);
}

}  // namespace sufread
