#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "slidets/automata.hpp"
#include "test_util.hpp"

using namespace slidets;
using namespace slidets::testutil;

TEST_CASE("single word compiles to a chain") {
  Kernel k = kernel_word("word");
  CHECK(k.num_states == 5);
  CHECK(k.sources == std::vector<int>{0});
  CHECK(k.sinks == std::vector<int>{4});
  CHECK(kernel_accepts(k, "word"));
  CHECK_FALSE(kernel_accepts(k, "wor"));
  CHECK_FALSE(kernel_accepts(k, "words"));
}

TEST_CASE("empty word and empty language are distinct canonical forms") {
  Kernel eps = kernel_word("");
  CHECK(eps.num_states == 1);
  CHECK(kernel_contains_epsilon(eps));
  CHECK(enum_set(eps, 3) == WordSet{""});

  Kernel none = kernel_empty({'a', 'b'});
  CHECK(none.num_states == 0);
  CHECK(kernel_is_empty(none));
  CHECK(enum_set(none, 3).empty());
  CHECK_FALSE(kernel_shortest_length(none).has_value());
}

TEST_CASE("two-word union") {
  Kernel k = kernel_words({"a", "bc"});
  CHECK(k.num_states == 3);
  CHECK(enum_set(k, 4) == WordSet{"a", "bc"});
}

TEST_CASE("star of a single word") {
  Kernel k = kernel_star(kernel_word("ab"));
  CHECK(k.num_states == 2);
  CHECK(enum_set(k, 6) == WordSet{"", "ab", "abab", "ababab"});
}

TEST_CASE("pair language and its boolean combinations") {
  Kernel choice = kernel_letters({'a', 'b'});
  Kernel pairs = kernel_concat(choice, choice);
  CHECK(pairs.num_states == 3);
  CHECK(enum_set(pairs, 4) == WordSet{"aa", "ab", "ba", "bb"});

  Kernel ab = kernel_word("ab");
  Kernel inter = kernel_intersect(pairs, ab);
  CHECK(inter.num_states == 3);
  CHECK(enum_set(inter, 4) == WordSet{"ab"});

  Kernel uni = kernel_union(pairs, ab);
  CHECK(uni.num_states == 3);
  CHECK(enum_set(uni, 4) == WordSet{"aa", "ab", "ba", "bb"});

  Kernel diff = kernel_difference(pairs, ab);
  CHECK(diff.num_states == 4);
  CHECK(enum_set(diff, 4) == WordSet{"aa", "ba", "bb"});
}

TEST_CASE("a*ba* needs only two states") {
  Kernel a = kernel_word("a");
  Kernel k = kernel_concat(kernel_star(a),
                           kernel_concat(kernel_word("b"), kernel_star(a)));
  CHECK(k.num_states == 2);
  CHECK(kernel_accepts(k, "b"));
  CHECK(kernel_accepts(k, "aabaa"));
  CHECK_FALSE(kernel_accepts(k, "abab"));
}

TEST_CASE("one inserted mark") {
  Kernel k = kernel_shuffle(kernel_word("ab"), 's');
  CHECK(k.num_states == 6);
  CHECK(kernel_enumerate(k, 4) ==
        std::vector<Word>{"abs", "asb", "sab"});
}

TEST_CASE("prefix and suffix closures") {
  Kernel w = kernel_word("word");
  CHECK(enum_set(kernel_prefixes(w), 5) ==
        WordSet{"", "w", "wo", "wor", "word"});
  CHECK(enum_set(kernel_suffixes(w), 5) ==
        WordSet{"", "d", "rd", "ord", "word"});
}

TEST_CASE("first and last letters") {
  Kernel k = kernel_words({"ab", "cd", "ad"});
  CHECK(enum_set(kernel_truncate1(k), 2) == WordSet{"a", "c"});
  CHECK(enum_set(kernel_tail1(k), 2) == WordSet{"b", "d"});
}

TEST_CASE("enumeration is shortest-first then letter order") {
  Kernel k = kernel_union(kernel_star(kernel_word("b")),
                          kernel_words({"a", "ba"}));
  CHECK(kernel_enumerate(k, 3) ==
        std::vector<Word>{"", "a", "b", "ba", "bb", "bbb"});
}

TEST_CASE("enumeration cap honours the environment override") {
  Kernel k = kernel_star(kernel_word("a"));
  CHECK(kernel_enumerate(k).size() == 9);  // default cap 8, plus epsilon
  setenv("SLIDETS_MAX_ENUM_LEN", "3", 1);
  CHECK(kernel_enumerate(k).size() == 4);
  unsetenv("SLIDETS_MAX_ENUM_LEN");
}

TEST_CASE("normalize is idempotent and canonical") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Kernel k = regex_compile(random_regex(rng, 4));
    CHECK(normalize(k) == k);
  }
}

TEST_CASE("language equality is structural equality of canonical forms") {
  Kernel a = regex_compile("(<|=)*");
  Kernel b = regex_compile("(=|<)*(<*|=)");
  CHECK(a == b);
  CHECK(kernel_same_language(a, b));
  Kernel c = regex_compile("(<|=)+");
  CHECK_FALSE(a == c);
  CHECK_FALSE(kernel_same_language(a, c));
}

TEST_CASE("reversal and relabelling") {
  Kernel k = kernel_words({"ab", "abc"});
  CHECK(enum_set(kernel_reverse(k), 4) == WordSet{"ba", "cba"});
  Kernel swapped = kernel_relabel(k, {{'a', 'b'}, {'b', 'a'}});
  CHECK(enum_set(swapped, 4) == WordSet{"ba", "bac"});
  CHECK_THROWS_AS(kernel_relabel(k, {{'a', 'b'}}), std::invalid_argument);
}

TEST_CASE("complement over the kernel's own alphabet") {
  Kernel k = regex_compile("<+");
  Kernel co = kernel_complement(k);
  WordSet expect = set_difference(all_words({'<', '=', '>'}, 3),
                                  enum_set(k, 3));
  CHECK(enum_set(co, 3) == expect);
}

TEST_CASE("algebra agrees with the enumeration oracle on random pairs") {
  constexpr int kLen = 6;
  std::mt19937 rng(20260816);
  // Words over the signature alphabet of length at most kLen.
  Kernel short_words = kernel_epsilon({});
  for (int i = 0; i < kLen; ++i)
    short_words = kernel_concat(
        short_words,
        kernel_optional(kernel_letters({kLess, kEqual, kGreater})));
  for (int i = 0; i < 200; ++i) {
    Kernel a = regex_compile(random_regex(rng, 4));
    Kernel b = regex_compile(random_regex(rng, 4));
    WordSet wa = enum_set(a, kLen), wb = enum_set(b, kLen);

    CHECK(enum_set(kernel_union(a, b), kLen) == set_union(wa, wb));
    CHECK(enum_set(kernel_intersect(a, b), kLen) == set_intersect(wa, wb));
    CHECK(enum_set(kernel_difference(a, b), kLen) == set_difference(wa, wb));
    // Concatenations longer than kLen are invisible to the oracle, so
    // compare truncated enumerations.
    CHECK(enum_set(kernel_concat(a, b), kLen) == set_concat(wa, wb, kLen));
    CHECK(enum_set(kernel_star(a), kLen) == set_star(wa, kLen));
    CHECK(enum_set(kernel_plus(a), kLen) == set_plus(wa, kLen));
    CHECK(enum_set(kernel_optional(a), kLen) == set_union(wa, WordSet{""}));
    CHECK(enum_set(kernel_shuffle(a, 's'), kLen) ==
          set_shuffle(wa, 's', kLen));
    CHECK(enum_set(kernel_reverse(a), kLen) == set_reverse(wa));

    // Closure operators can surface short prefixes of arbitrarily long
    // words, so exercise them on a length-bounded restriction where the
    // enumeration oracle is exhaustive.
    Kernel bounded = kernel_intersect(a, short_words);
    WordSet wbound = enum_set(bounded, kLen);
    CHECK(enum_set(kernel_prefixes(bounded), kLen) == set_prefixes(wbound));
    CHECK(enum_set(kernel_suffixes(bounded), kLen) == set_suffixes(wbound));
    WordSet firsts, lasts;
    for (const Word& w : wbound) {
      if (w.empty()) continue;
      firsts.insert(Word(1, w.front()));
      lasts.insert(Word(1, w.back()));
    }
    CHECK(enum_set(kernel_truncate1(bounded), 1) == firsts);
    CHECK(enum_set(kernel_tail1(bounded), 1) == lasts);
  }
}

TEST_CASE("concatenation respects epsilon on either side") {
  Kernel eps_or_a = kernel_optional(kernel_word("a"));
  Kernel b = kernel_word("b");
  CHECK(enum_set(kernel_concat(eps_or_a, b), 3) == WordSet{"b", "ab"});
  CHECK(enum_set(kernel_concat(b, eps_or_a), 3) == WordSet{"b", "ba"});
}

TEST_CASE("shortest accepted word length") {
  CHECK(kernel_shortest_length(regex_compile(">=+>")) == 3);
  CHECK(kernel_shortest_length(regex_compile("(<>)+<(>|eps)")) == 3);
  CHECK(kernel_shortest_length(regex_compile("eps")) == 0);
}

TEST_CASE("dot rendering mentions every state and arc") {
  Kernel k = kernel_word("ab");
  std::string dot = kernel_to_dot(k, "chain");
  CHECK(dot.find("digraph chain") != std::string::npos);
  CHECK(dot.find("q0 -> q1") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
}
