#pragma once

#include <string>

#include "sufread/automata.hpp"
#include "sufread/text_format.hpp"
#include "sufread/word.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(SUFREAD_TEST_DATA) + "/" + name; }

inline sufread::Dfa dfa(const std::string& name) { return sufread::parse_file(path(name)).dfa(); }
inline sufread::Dsa dsa(const std::string& name) { return sufread::parse_file(path(name)).dsa(); }
inline sufread::Graph graph(const std::string& name) { return sufread::parse_file(path(name)).graph(); }

/// Character-level word; empty text is ε.
inline sufread::Word w(const sufread::Alphabet& alphabet, const std::string& text) {
  return sufread::parse_word(alphabet, text, true);
}

}  // namespace fixture
