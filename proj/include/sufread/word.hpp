#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sufread {

/// Index of a token in its (sorted) alphabet. Comparing symbols therefore
/// compares the token texts lexicographically.
using Symbol = std::uint32_t;

/// A finite sequence of symbols; the empty vector is the empty word.
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

/// True iff `token` is a non-empty run of `[A-Za-z0-9_.$-]`.
bool is_valid_token(std::string_view token);

/// Finite, non-empty set of text tokens kept in sorted order.
class Alphabet {
 public:
  Alphabet() = default;
  /// Sorts the tokens. Throws ValidationError on duplicates, empty input,
  /// or tokens that are not valid file-format tokens.
  explicit Alphabet(std::vector<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const std::string& token(Symbol s) const { return tokens_.at(s); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  std::optional<Symbol> find(std::string_view token) const;
  /// Like find(), but throws ValidationError for unknown tokens.
  Symbol at(std::string_view token) const;
  /// Every token is a single character.
  bool is_character_alphabet() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> tokens_;
};

/// `u` is a suffix of `w`; the empty word is a suffix of every word.
bool is_suffix(WordView u, WordView w);
bool is_prefix(WordView u, WordView w);

/// Shortlex order: by length, then lexicographically by symbol.
bool shortlex_less(WordView a, WordView b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

/// The unique longest member of `candidates` that is a suffix of `w`.
std::optional<Word> longest_suffix_in(std::span<const Word> candidates, WordView w);

/// All prefixes of the given words (including the empty word), shortlex sorted.
std::vector<Word> prefix_closure(std::span<const Word> words);

Word concat(WordView a, WordView b);

/// Whitespace-separated tokens, or one symbol per character when `chars` is set.
Word parse_word(const Alphabet& alphabet, std::string_view text, bool chars = false);

/// Tokens concatenated for character alphabets, space separated otherwise; "ε" when empty.
std::string format_word(const Alphabet& alphabet, WordView w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace sufread
