#include "sufread/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "sufread/errors.hpp"

namespace sufread {

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '$' ||
           c == '-';
  });
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw ValidationError("alphabet must not be empty");
  for (const auto& t : tokens_) {
    if (!is_valid_token(t)) throw ValidationError("invalid alphabet token '" + t + "'");
  }
  std::sort(tokens_.begin(), tokens_.end());
  auto dup = std::adjacent_find(tokens_.begin(), tokens_.end());
  if (dup != tokens_.end()) throw ValidationError("duplicate alphabet token '" + *dup + "'");
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
  if (it == tokens_.end() || *it != token) return std::nullopt;
  return static_cast<Symbol>(it - tokens_.begin());
}

Symbol Alphabet::at(std::string_view token) const {
  if (auto s = find(token)) return *s;
  throw ValidationError("symbol '" + std::string(token) + "' is not in the alphabet");
}

bool Alphabet::is_character_alphabet() const {
  return std::all_of(tokens_.begin(), tokens_.end(),
                     [](const std::string& t) { return t.size() == 1; });
}

bool is_suffix(WordView u, WordView w) {
  if (u.size() > w.size()) return false;
  return std::equal(u.begin(), u.end(), w.end() - static_cast<std::ptrdiff_t>(u.size()));
}

bool is_prefix(WordView u, WordView w) {
  if (u.size() > w.size()) return false;
  return std::equal(u.begin(), u.end(), w.begin());
}

bool shortlex_less(WordView a, WordView b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<Word> longest_suffix_in(std::span<const Word> candidates, WordView w) {
  const Word* best = nullptr;
  for (const auto& c : candidates) {
    if (is_suffix(c, w) && (best == nullptr || c.size() > best->size())) best = &c;
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::vector<Word> prefix_closure(std::span<const Word> words) {
  std::set<Word, ShortlexLess> closure;
  closure.insert(Word{});
  for (const auto& w : words) {
    for (std::size_t len = 1; len <= w.size(); ++len) closure.insert(Word(w.begin(), w.begin() + len));
  }
  return {closure.begin(), closure.end()};
}

Word concat(WordView a, WordView b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text, bool chars) {
  Word out;
  if (chars) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      out.push_back(alphabet.at(std::string_view(&c, 1)));
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(alphabet.at(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::string format_word(const Alphabet& alphabet, WordView w) {
  if (w.empty()) return "ε";
  const bool chars = alphabet.is_character_alphabet();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!chars && i > 0) out += ' ';
    out += alphabet.token(w[i]);
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : w) {
    h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h ^ w.size();
}

}  // namespace sufread
