#pragma once

#include <cstddef>
#include <random>

#include "sufread/automata.hpp"

namespace sufread {

using Rng = std::mt19937_64;

/// Alphabet "a", "b", "c", ... of the given size (at most 26).
Alphabet letters(std::size_t size);

struct RandomDsaOptions {
  std::size_t max_states = 4;
  std::size_t alphabet_size = 2;
  std::size_t max_label_len = 3;
  std::size_t max_out = 3;  // labels per state
};

/// State count, labels, targets and accepting states drawn uniformly.
/// Initial state is state 0.
Dsa random_dsa(Rng& rng, const RandomDsaOptions& options = {});

/// Complete DFA with `states` states over `alphabet_size` letters.
Dfa random_dfa(Rng& rng, std::size_t states, std::size_t alphabet_size);

}  // namespace sufread
