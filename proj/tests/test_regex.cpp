#include <catch2/catch_amalgamated.hpp>

#include "slidets/patterns.hpp"
#include "slidets/regex.hpp"
#include "test_util.hpp"

using namespace slidets;
using namespace slidets::testutil;

TEST_CASE("letters, eps and marks parse to themselves") {
  CHECK(enum_set(regex_compile("<"), 2) == WordSet{"<"});
  CHECK(enum_set(regex_compile("eps"), 2) == WordSet{""});
  CHECK(enum_set(regex_compile("s1"), 2) == WordSet{"s"});
  CHECK(enum_set(regex_compile("s2"), 2) == WordSet{"t"});
}

TEST_CASE("postfix binds tighter than concatenation") {
  CHECK(enum_set(regex_compile("<=*"), 3) ==
        WordSet{"<", "<=", "<=="});
  CHECK(enum_set(regex_compile("<+?"), 2) == WordSet{"", "<", "<<"});
}

TEST_CASE("concatenation binds tighter than intersection") {
  // "<= & <=" intersects the two-letter word with itself.
  CHECK(enum_set(regex_compile("<= & <="), 3) == WordSet{"<="});
  CHECK(enum_set(regex_compile("<> & <="), 3).empty());
}

TEST_CASE("intersection binds tighter than difference") {
  // (<|=) & (<|>) \ < keeps intersection {<} minus {<}: empty.
  CHECK(enum_set(regex_compile("(<|=)&(<|>)\\<"), 2).empty());
}

TEST_CASE("difference is left-associative and binds tighter than union") {
  CHECK(enum_set(regex_compile("(<|=|>)\\<\\="), 2) == WordSet{">"});
  CHECK(enum_set(regex_compile("(<|=|>)\\<\\=|<"), 2) == WordSet{"<", ">"});
}

TEST_CASE("union is the loosest binder") {
  CHECK(enum_set(regex_compile("<|=>"), 3) == WordSet{"<", "=>"});
}

TEST_CASE("whitespace is ignored") {
  CHECK(enum_set(regex_compile(" < ( = | > ) * "), 2) ==
        WordSet{"<", "<=", "<>"});
}

TEST_CASE("malformed expressions are rejected") {
  CHECK_THROWS_AS(parse_regex(""), RegexParseError);
  CHECK_THROWS_AS(parse_regex("   "), RegexParseError);
  CHECK_THROWS_AS(parse_regex("("), RegexParseError);
  CHECK_THROWS_AS(parse_regex("<)"), RegexParseError);
  CHECK_THROWS_AS(parse_regex("*<"), RegexParseError);
  CHECK_THROWS_AS(parse_regex("<|"), RegexParseError);
  CHECK_THROWS_AS(parse_regex("s3"), RegexParseError);
  CHECK_THROWS_AS(parse_regex("e"), RegexParseError);
  CHECK_THROWS_AS(parse_regex("a"), RegexParseError);
}

TEST_CASE("mirror reverses word order and exchanges comparisons") {
  Regex r = parse_regex("<<>");
  CHECK(enum_set(regex_compile(regex_mirror(r)), 3) == WordSet{"<>>"});
  // A mirrored catalogue shape: terraces map onto each other.
  Regex terrace = parse_regex(">=+>");
  CHECK(kernel_same_language(regex_compile(regex_mirror(terrace)),
                             regex_compile("<=+<")));
}

TEST_CASE("mirror rejects synchronisation marks") {
  CHECK_THROWS_AS(regex_mirror(parse_regex("< s1 >")), std::invalid_argument);
  CHECK_THROWS_AS(regex_mirror(regex_shuffle(regex_letter('<'), kSync1)),
                  std::invalid_argument);
}

TEST_CASE("mirror agrees with the automaton-level mirror") {
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    Regex r = random_regex(rng, 4);
    CHECK(kernel_same_language(regex_compile(regex_mirror(r)),
                               mirror_language(regex_compile(r))));
  }
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 50; ++i) {
    Regex r = random_regex(rng, 4);
    Regex back = parse_regex(regex_to_string(r));
    CHECK(kernel_same_language(regex_compile(r), regex_compile(back)));
  }
}

TEST_CASE("compiled kernels carry the signature alphabet plus used marks") {
  CHECK(regex_compile("<").alphabet == std::vector<Letter>{'<', '=', '>'});
  CHECK(regex_compile("< s1").alphabet ==
        std::vector<Letter>{'<', '=', '>', 's'});
  CHECK(regex_compile("s2 s1").alphabet ==
        std::vector<Letter>{'<', '=', '>', 's', 't'});
}

TEST_CASE("empty-language expressions normalize to the empty kernel") {
  CHECK(kernel_is_empty(regex_compile("<&>")));
  CHECK(kernel_is_empty(regex_compile("eps\\eps")));
}
