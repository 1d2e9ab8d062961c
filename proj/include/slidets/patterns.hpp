// The pattern catalogue and the language-level property tests that decide
// which window equations and presence strategies a pattern supports.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slidets/automata.hpp"
#include "slidets/regex.hpp"

namespace slidets {

// A pattern is a regular language of signature words plus two trim widths:
// an occurrence spanning series positions [lo, hi] contributes feature
// values computed over the trimmed range [lo + before, hi - after].
struct Pattern {
  std::string name;       // canonical snake_case identifier
  std::string regex_src;
  int before = 0;
  int after = 0;
  Kernel lang;            // canonical kernel over {'<', '=', '>'}
  int omega = 0;          // length of a shortest signature word
};

// The 22 built-in patterns.
const std::vector<Pattern>& pattern_catalog();

// Looks a pattern up by canonical name or accepted alias (e.g.
// "decreasing_sequence" for "dec_seq").  Returns nullptr when unknown.
const Pattern* find_pattern(std::string_view name);

// Compiles an ad-hoc pattern from a regex.
Pattern make_pattern(std::string name, const std::string& regex_src,
                     int before, int after);

// Word-reversal plus '<' / '>' exchange, at the automaton level.
Kernel mirror_language(const Kernel& lang);

struct LanguageProperties {
  bool convex = false;
  bool inflexion_free = false;
  bool one_inflexion = false;
  bool exclude_out_in = false;
  bool single_letter = false;
  // The letter that appears in every word of L and is itself a word of L.
  std::optional<Letter> letter;
  // The letter e such that every word of L contains e and every suffix of an
  // L-word starting at an e is again in L.
  std::optional<Letter> suffix_unavoidable;
  bool incompressible = false;
  // Every factor of length >= omega of an L-word is again in L.  Absent
  // when omega exceeds the supported bound of 5.
  std::optional<bool> factor;
};

// Decides each property by an automaton emptiness test over {'<','=','>'}.
LanguageProperties analyze_language(const Kernel& lang);

struct PatternProperties : LanguageProperties {
  // Name of the catalogue pattern recognising the mirrored language with
  // exchanged trims, when one exists.
  std::string reverse_name;
};

PatternProperties analyze_pattern(const Pattern& p);

}  // namespace slidets
