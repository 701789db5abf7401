#include "sufread/random.hpp"

#include <set>
#include <string>

#include "sufread/errors.hpp"

namespace sufread {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::string> state_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  return names;
}

}  // namespace

Alphabet letters(std::size_t size) {
  if (size == 0 || size > 26) throw ValidationError("letter alphabets have 1 to 26 symbols");
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < size; ++i) tokens.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(tokens));
}

Dsa random_dsa(Rng& rng, const RandomDsaOptions& options) {
  Dsa a;
  a.alphabet = letters(options.alphabet_size);
  const std::size_t n = pick(rng, 1, options.max_states);
  a.names = state_names(n);
  a.initial = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (pick(rng, 0, 1) == 1) a.accepting.push_back(static_cast<StateId>(q));
    std::set<Word> used;
    const std::size_t count = pick(rng, 0, options.max_out);
    for (std::size_t i = 0; i < count; ++i) {
      Word label(pick(rng, 1, options.max_label_len));
      for (auto& s : label) s = static_cast<Symbol>(pick(rng, 0, options.alphabet_size - 1));
      if (!used.insert(label).second) continue;
      a.transitions.push_back({static_cast<StateId>(q), label, static_cast<StateId>(pick(rng, 0, n - 1))});
    }
  }
  canonicalize(a);
  return a;
}

Dfa random_dfa(Rng& rng, std::size_t states, std::size_t alphabet_size) {
  Dfa m = Dfa::with_states(letters(alphabet_size), state_names(states));
  m.initial = 0;
  for (std::size_t q = 0; q < states; ++q) {
    if (pick(rng, 0, 1) == 1) m.accepting.push_back(static_cast<StateId>(q));
  }
  for (auto& t : m.delta) t = static_cast<StateId>(pick(rng, 0, states - 1));
  return m;
}

}  // namespace sufread
