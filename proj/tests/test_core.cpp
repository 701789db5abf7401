#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "support.hpp"
#include "sufread/automata.hpp"
#include "sufread/errors.hpp"
#include "sufread/random.hpp"
#include "sufread/word.hpp"

using namespace sufread;
using fixture::w;

TEST_SUITE("core") {

TEST_CASE("suffix and prefix relations") {
  const Alphabet ab({"a", "b"});
  CHECK(is_suffix(Word{}, w(ab, "abb")));
  CHECK(is_suffix(w(ab, "aab"), w(ab, "abbaab")));
  CHECK_FALSE(is_suffix(w(ab, "ba"), w(ab, "aab")));
  CHECK(is_suffix(w(ab, "aab"), w(ab, "aab")));
  CHECK_FALSE(is_suffix(w(ab, "aab"), w(ab, "ab")));
  CHECK(is_prefix(w(ab, "ab"), w(ab, "abb")));
  CHECK_FALSE(is_prefix(w(ab, "bb"), w(ab, "abb")));
}

TEST_CASE("longest suffix among candidates") {
  const Alphabet chars({"d", "e", "f", "i", "n", "x"});
  const std::vector<Word> keywords{w(chars, "if"), w(chars, "endif")};
  CHECK(longest_suffix_in(keywords, w(chars, "xxendif")) == w(chars, "endif"));

  const Alphabet ab({"a", "b"});
  const std::vector<Word> labels{w(ab, "aa"), w(ab, "b")};
  CHECK(longest_suffix_in(labels, w(ab, "ab")) == w(ab, "b"));
  const std::vector<Word> only_ab{w(ab, "ab")};
  CHECK_FALSE(longest_suffix_in(only_ab, w(ab, "ba")).has_value());
}

TEST_CASE("longest suffix is the longest member that is a suffix") {
  const Alphabet ab({"a", "b"});
  const auto words = oracle::all_words(2, 4);
  Rng rng(7);
  for (int round = 0; round < 300; ++round) {
    std::vector<Word> u;
    for (int i = 0; i < 4; ++i) u.push_back(words[1 + rng() % (words.size() - 1)]);
    const Word& x = words[rng() % words.size()];
    const auto got = longest_suffix_in(u, x);
    std::size_t best = 0;
    bool any = false;
    for (const auto& c : u) {
      if (is_suffix(c, x)) {
        any = true;
        best = std::max(best, c.size());
      }
    }
    REQUIRE(got.has_value() == any);
    if (got) {
      CHECK(std::find(u.begin(), u.end(), *got) != u.end());
      CHECK(is_suffix(*got, x));
      CHECK(got->size() == best);
    }
  }
}

TEST_CASE("suffix relation is transitive") {
  const auto words = oracle::all_words(2, 4);
  for (const auto& u : words)
    for (const auto& v : words)
      for (const auto& x : words)
        if (is_suffix(u, v) && is_suffix(v, x)) REQUIRE(is_suffix(u, x));
}

TEST_CASE("shortlex order") {
  const Alphabet ab({"a", "b"});
  CHECK(shortlex_less(w(ab, "b"), w(ab, "aa")));
  CHECK(shortlex_less(w(ab, "ab"), w(ab, "ba")));
  CHECK_FALSE(shortlex_less(w(ab, "ab"), w(ab, "ab")));
}

TEST_CASE("alphabet tokens are sorted and validated") {
  const Alphabet x({"endif", "else", "if"});
  CHECK(x.tokens() == std::vector<std::string>{"else", "endif", "if"});
  CHECK(x.at("if") == 2);
  CHECK_FALSE(x.is_character_alphabet());
  CHECK_THROWS_AS(Alphabet({"a", "a"}), ValidationError);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), ValidationError);
  CHECK_THROWS_AS(Alphabet({"a b"}), ValidationError);
  CHECK_THROWS_AS(x.at("fi"), ValidationError);
}

TEST_CASE("word formatting") {
  const Alphabet ab({"a", "b"});
  CHECK(format_word(ab, Word{}) == "ε");
  CHECK(format_word(ab, w(ab, "aab")) == "aab");
  const Alphabet tokens({"else", "if"});
  CHECK(format_word(tokens, parse_word(tokens, "if else")) == "if else");
}

TEST_CASE("out labels and their prefix closure") {
  const Dsa a2 = fixture::dsa("a2_suffix_aab.dsa");
  const Word aab = w(a2.alphabet, "aab");
  CHECK(out_labels(a2, a2.state("q0")) == std::vector<Word>{aab});
  CHECK(out_prefix_closure(a2, a2.state("q0")) ==
        std::vector<Word>{Word{}, w(a2.alphabet, "a"), w(a2.alphabet, "aa"), aab});

  Dsa lone = a2;
  lone.transitions.clear();
  CHECK(out_labels(lone, 0).empty());
  CHECK_THROWS_AS(out_labels(a2, 5), UnknownState);
}

TEST_CASE("size metrics") {
  const Dsa a2 = fixture::dsa("a2_suffix_aab.dsa");
  CHECK(size_metrics(a2) == SizeMetrics{2, 2, 6, 10});

  const Dfa ends_ab = fixture::dfa("ends_ab.dfa");
  CHECK(size_metrics(ends_ab) == SizeMetrics{3, 6, 6, 15});
  CHECK(size_metrics(dfa_as_dsa(ends_ab)) == size_metrics(ends_ab));
}

TEST_CASE("size is invariant under renaming") {
  Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    Dsa a = random_dsa(rng);
    Dsa b = a;
    std::reverse(b.names.begin(), b.names.end());
    const auto n = static_cast<StateId>(a.num_states());
    const auto flip = [n](StateId q) { return n - 1 - q; };
    b.initial = flip(a.initial);
    for (auto& q : b.accepting) q = flip(q);
    for (auto& t : b.transitions) {
      t.source = flip(t.source);
      t.target = flip(t.target);
    }
    canonicalize(b);
    CHECK(size_metrics(a) == size_metrics(b));
  }
}

TEST_CASE("validation reports structural problems") {
  Dsa a2 = fixture::dsa("a2_suffix_aab.dsa");
  CHECK(validate(a2).empty());

  Dsa twice = a2;
  twice.transitions.push_back({0, w(a2.alphabet, "aab"), 0});
  const auto v = validate(twice);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::kDeterminism);
  CHECK_THROWS_AS(require_valid(twice), ValidationError);

  Dsa empty_label = a2;
  empty_label.transitions.push_back({1, Word{}, 0});
  CHECK(validate(empty_label).front().kind == ViolationKind::kEmptyLabel);

  Dfa m = fixture::dfa("ends_ab.dfa");
  m.next(0, 0) = 9;
  CHECK(validate(m).front().kind == ViolationKind::kDanglingTarget);

  Dfa bad_initial = fixture::dfa("ends_ab.dfa");
  bad_initial.initial = 3;
  CHECK(validate(bad_initial).front().kind == ViolationKind::kInitial);
}

TEST_CASE("a complete DFA read as a DSA") {
  const Dfa m = fixture::dfa("ends_ab.dfa");
  const Dsa a = dfa_as_dsa(m);
  CHECK(a.transitions.size() == 6);
  CHECK(std::all_of(a.transitions.begin(), a.transitions.end(),
                    [](const Transition& t) { return t.label.size() == 1; }));
}

}  // TEST_SUITE
