// Classification of where pattern occurrences can sit relative to a window
// split: word types, feasibility of type triples, and the representative
// triples that group patterns into behavioural classes.
#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "slidets/automata.hpp"
#include "slidets/patterns.hpp"

namespace slidets {

// Type of a nonempty signature word w relative to a pattern language L:
//   Out  — w contains no factor in L;
//   Fac  — w contains an L factor, but no L prefix and no L suffix;
//   Pre  — w has a proper L prefix, no L suffix, and w itself is not in L;
//   Suf  — symmetric to Pre;
//   In   — w has an L prefix and an L suffix (including w in L itself).
enum class WordType { Out, Fac, Pre, Suf, In };

inline constexpr std::array<WordType, 5> kWordTypes = {
    WordType::Out, WordType::Fac, WordType::Pre, WordType::Suf, WordType::In};

const char* word_type_name(WordType t);

// The language of all nonempty words of the given type.  The five languages
// partition the nonempty words over {'<', '=', '>'}.
Kernel word_type_language(const Kernel& lang, WordType t);

WordType classify_word(const Kernel& lang, const Word& w);

struct TypeTriple {
  WordType prefix, middle, suffix;
  friend auto operator<=>(const TypeTriple&, const TypeTriple&) = default;
};

std::string triple_name(TypeTriple t);  // e.g. "pre,fac,suf"

// The synchronised language deciding whether a split w = w1 w2 w3 of a word
// of L can exhibit the given types: two marks delimit w2 (nonempty, with w1
// and w3 not both empty); the prefix w1 w2 must have type t.prefix, the
// middle w2 type t.middle, and the suffix w2 w3 type t.suffix.
Kernel triple_language(const Kernel& lang, TypeTriple t);

bool triple_feasible(const Kernel& lang, TypeTriple t);

// All feasible triples of a language (at most 125 candidates).
std::set<TypeTriple> feasible_triples(const Kernel& lang);

// Closed-form necessary condition: triples violating it are infeasible for
// every language.  Exactly 61 of the 125 triples pass.
bool triple_possibly_feasible(TypeTriple t);

// A representative summarises, per component, the set of types seen across
// all feasible triples with the same out/non-out shape.
enum class RepComponent { OUT, FAC, PRE, SUF, PS, IN };

const char* rep_component_name(RepComponent c);

struct RepTriple {
  RepComponent prefix, middle, suffix;
  friend auto operator<=>(const RepTriple&, const RepTriple&) = default;
};

std::string rep_triple_name(RepTriple t);  // e.g. "PRE-FAC-SUF"

std::set<RepTriple> representatives(const std::set<TypeTriple>& feasible);
std::set<RepTriple> representatives(const Kernel& lang);

// Groups the sixteen classified catalogue patterns by their representative
// sets; the map key is the class header.
std::map<std::set<RepTriple>, std::vector<std::string>> classify_catalog();

}  // namespace slidets
