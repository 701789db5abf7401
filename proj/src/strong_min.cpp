#include "sufread/strong_min.hpp"

#include <algorithm>
#include <string>

#include "sufread/dfa_ops.hpp"
#include "sufread/errors.hpp"
#include "sufread/semantics.hpp"
#include "sufread/tracking.hpp"

namespace sufread {

namespace {

/// Length of the first proper prefix of `y` that ends with `x`, if any.
std::optional<std::size_t> suffix_of_proper_prefix(const Word& x, const Word& y) {
  for (std::size_t j = x.size(); j < y.size(); ++j) {
    if (std::equal(x.begin(), x.end(), y.begin() + static_cast<std::ptrdiff_t>(j - x.size()))) {
      return j;
    }
  }
  return std::nullopt;
}

struct PrefixHit {
  std::size_t alpha_len;
  std::size_t beta_len;
};

/// Some non-empty prefix of `x` is a suffix of a non-empty proper prefix of `y`.
std::optional<PrefixHit> prefix_inside(const Word& x, const Word& y) {
  for (std::size_t j = 1; j < y.size(); ++j) {
    for (std::size_t i = 1; i <= std::min(x.size(), j); ++i) {
      if (std::equal(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i),
                     y.begin() + static_cast<std::ptrdiff_t>(j - i))) {
        return PrefixHit{i, j};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Word>> labels_by_state(const Dsa& a) {
  std::vector<std::vector<Word>> out(a.num_states());
  for (StateId q = 0; q < static_cast<StateId>(a.num_states()); ++q) out[q] = out_labels(a, q);
  return out;
}

Word take(const Word& w, std::size_t n) {
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

std::vector<DsaWfViolation> dsa_well_formedness_violations(const Dsa& a, bool stop_at_first) {
  std::vector<DsaWfViolation> out;
  auto labels = labels_by_state(a);
  for (StateId q = 0; q < static_cast<StateId>(labels.size()); ++q) {
    for (const Word& alpha : labels[q]) {
      for (const Word& beta : labels[q]) {
        if (auto j = suffix_of_proper_prefix(alpha, beta)) {
          out.push_back({q, alpha, beta, take(beta, *j)});
          if (stop_at_first) return out;
        }
      }
    }
  }
  return out;
}

std::vector<StrongViolation> strong_violations(const Dsa& a, bool stop_at_first) {
  std::vector<StrongViolation> out;
  auto labels = labels_by_state(a);
  for (StateId q = 0; q < static_cast<StateId>(labels.size()); ++q) {
    for (const Word& alpha : labels[q]) {
      for (const Word& beta : labels[q]) {
        if (alpha == beta) continue;
        if (auto hit = prefix_inside(alpha, beta)) {
          out.push_back({q, alpha, beta, take(alpha, hit->alpha_len), take(beta, hit->beta_len)});
          if (stop_at_first) return out;
        }
      }
    }
  }
  return out;
}

bool dsa_residual_equiv(const Dsa& a, StateId q1, StateId q2) {
  auto t = tracking_dfa(a);
  return residual_equiv(t.dfa, t.pair_eps.at(q1), t.pair_eps.at(q2));
}

StrongMinResult minimize_strong(const Dfa& m, bool all_minima, const EnumerateOptions& options) {
  require_valid(m);
  StrongMinResult result;
  result.canonical = minimize(complete(m)).dfa;
  bool found = false;
  for_each_suffix_tracking_set(result.canonical, options, [&](const StateSet& s) {
    Dsa d = remove_useless(induced_dsa(result.canonical, s, true, options.cap));
    if (!is_strong(d)) return true;
    const std::size_t total = size_metrics(d).total;
    if (all_minima) {
      const std::size_t best = found ? size_metrics(result.dsa).total : 0;
      if (!found || total < best) {
        result.all_minima.clear();
        result.all_minima.push_back(d);
      } else if (total == best) {
        bool fresh = std::none_of(result.all_minima.begin(), result.all_minima.end(),
                                  [&](const Dsa& x) { return dsa_isomorphic(x, d).has_value(); });
        if (fresh) result.all_minima.push_back(d);
      }
    }
    if (!found || smaller_dsa(d, result.dsa)) {
      result.dsa = std::move(d);
      result.states = s;
      found = true;
    }
    return true;
  });
  if (!found) throw PreconditionError("no strong DSA was derived (enumeration limit too small?)");
  return result;
}

namespace {

/// Exhaustive generator of DSAs in breadth-first canonical form: states are
/// filled in id order, each state's labels in shortlex order, and every
/// target is either an already discovered state or the next fresh id.
class BruteForce {
 public:
  BruteForce(const Dfa& language, const BruteForceOptions& options)
      : lang_(complete(language)), options_(options), k_(lang_.alphabet.size()) {
    // Sample words up to length 6 reject most candidates before the exact check.
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 0; len <= 6; ++len) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        samples_.push_back(w);
        expected_.push_back(dfa_accepts(lang_, w));
        if (len < 6) {
          for (Symbol a = 0; a < k_; ++a) {
            Word x = w;
            x.push_back(a);
            next.push_back(std::move(x));
          }
        }
      }
      frontier = std::move(next);
    }
    eps_accepted_ = expected_.front();
  }

  MinimalityCertificate run() {
    MinimalityCertificate cert;
    cert.search_bound = options_.max_total;
    // Shortlex list of every label that could fit.
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; len + 2 <= options_.max_total; ++len) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        for (Symbol a = 0; a < k_; ++a) {
          Word x = w;
          x.push_back(a);
          words_.push_back(x);
          next.push_back(std::move(x));
        }
      }
      frontier = std::move(next);
    }

    for (std::size_t total = 1; total <= options_.max_total; ++total) {
      for (std::size_t n = 1; n <= total; ++n) {
        n_ = n;
        out_.assign(n, {});
        discovered_ = 1;
        fill_state(0, total - n);
      }
      if (!found_.empty()) {
        cert.automaton = found_.front();
        cert.total = total;
        cert.all_minima = std::move(found_);
        cert.exhausted = true;
        cert.candidates = candidates_;
        return cert;
      }
    }
    cert.exhausted = true;
    cert.candidates = candidates_;
    return cert;
  }

 private:
  bool stop() const { return !options_.collect_all && !found_.empty(); }

  void fill_state(std::size_t state, std::size_t budget) {
    if (stop()) return;
    if (state == n_) {
      if (budget == 0) check_leaf();
      return;
    }
    if (state >= discovered_) return;  // unreachable state
    add_labels(state, 0, budget);
  }

  bool conflicts(std::size_t state, const Word& w) const {
    for (const auto& [label, target] : out_[state]) {
      if (options_.strong_only) {
        if (prefix_inside(label, w) || prefix_inside(w, label)) return true;
      } else if (suffix_of_proper_prefix(label, w) || suffix_of_proper_prefix(w, label)) {
        return true;
      }
    }
    return false;
  }

  void add_labels(std::size_t state, std::size_t from, std::size_t budget) {
    // Every undiscovered state still needs an incoming transition of cost >= 2.
    if ((n_ - discovered_) * 2 > budget) return;
    fill_state(state + 1, budget);
    for (std::size_t i = from; i < words_.size() && !stop(); ++i) {
      const Word& w = words_[i];
      const std::size_t cost = 1 + w.size();
      if (cost > budget) break;
      if (conflicts(state, w)) continue;
      const std::size_t limit = std::min(discovered_ + 1, n_);
      for (std::size_t target = 0; target < limit; ++target) {
        const bool fresh = target == discovered_;
        if (fresh) ++discovered_;
        out_[state].emplace_back(w, static_cast<StateId>(target));
        add_labels(state, i + 1, budget - cost);
        out_[state].pop_back();
        if (fresh) --discovered_;
      }
    }
  }

  /// Final state of the run, or -1 if input is left over.
  int simulate(const Word& w) const {
    std::size_t q = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::pair<Word, StateId>* best = nullptr;
      for (const auto& t : out_[q]) {
        const std::size_t len = t.first.size();
        if (len > i + 1 - start) continue;
        if (best != nullptr && len <= best->first.size()) continue;
        if (std::equal(t.first.begin(), t.first.end(),
                       w.begin() + static_cast<std::ptrdiff_t>(i + 1 - len))) {
          best = &t;
        }
      }
      if (best != nullptr) {
        q = static_cast<std::size_t>(best->second);
        start = i + 1;
      }
    }
    return start == w.size() ? static_cast<int>(q) : -1;
  }

  void check_leaf() {
    std::vector<int> finals(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) finals[i] = simulate(samples_[i]);
    const std::size_t masks = std::size_t{1} << (n_ - 1);
    for (std::size_t mask = 0; mask < masks && !stop(); ++mask) {
      ++candidates_;
      // Bit i-1 of the mask marks state i accepting; state 0 follows ε.
      auto accepting = [&](int q) {
        if (q < 0) return false;
        if (q == 0) return eps_accepted_;
        return ((mask >> (q - 1)) & 1U) != 0;
      };
      bool ok = true;
      for (std::size_t i = 0; i < samples_.size() && ok; ++i) {
        ok = accepting(finals[i]) == expected_[i];
      }
      if (!ok) continue;
      Dsa a;
      a.alphabet = lang_.alphabet;
      for (std::size_t q = 0; q < n_; ++q) {
        a.names.push_back("q" + std::to_string(q));
        if (accepting(static_cast<int>(q))) a.accepting.push_back(static_cast<StateId>(q));
        for (const auto& [label, target] : out_[q]) {
          a.transitions.push_back({static_cast<StateId>(q), label, target});
        }
      }
      canonicalize(a);
      if (dfa_equiv(tracking_dfa(a).dfa, lang_).equivalent) found_.push_back(std::move(a));
    }
  }

  Dfa lang_;
  BruteForceOptions options_;
  std::size_t k_;
  std::vector<Word> samples_;
  std::vector<bool> expected_;
  bool eps_accepted_ = false;
  std::vector<Word> words_;

  std::size_t n_ = 0;
  std::size_t discovered_ = 0;
  std::vector<std::vector<std::pair<Word, StateId>>> out_;
  std::vector<Dsa> found_;
  std::size_t candidates_ = 0;
};

}  // namespace

MinimalityCertificate brute_force_min_dsa(const Dfa& language, const BruteForceOptions& options) {
  require_valid(language);
  if (language.alphabet.size() > 3) {
    throw GuardExceeded("brute-force search is limited to alphabets of at most 3 symbols");
  }
  if (options.max_total > 10) {
    throw GuardExceeded("brute-force search is limited to total size at most 10");
  }
  return BruteForce(language, options).run();
}

}  // namespace sufread
