// Regular expressions over signature letters and synchronisation marks:
// the notation patterns are written in.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "slidets/automata.hpp"
#include "slidets/letters.hpp"

namespace slidets {

// Grammar (whitespace ignored):
//   union   :=  diff ('|' diff)*
//   diff    :=  isect ('\' isect)*          left-associative
//   isect   :=  concat ('&' concat)*
//   concat  :=  postfix postfix*
//   postfix :=  atom ('*' | '+' | '?')*
//   atom    :=  '<' | '=' | '>' | 's1' | 's2' | 'eps' | '(' union ')'
// Binding strength: postfix > concatenation > '&' > '\' > '|'.
struct RegexNode;
using Regex = std::shared_ptr<const RegexNode>;

struct RegexNode {
  enum Kind {
    Empty,      // no words
    Epsilon,    // the empty word
    Letter,     // one letter
    Concat,
    Union,
    Intersect,
    Difference,
    Star,
    Plus,
    Optional,
    Shuffle,    // insert `letter` at every position of words of `left`
  };
  Kind kind;
  slidets::Letter letter = 0;  // Letter and Shuffle
  Regex left, right;
};

struct RegexParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Regex parse_regex(const std::string& text);
std::string regex_to_string(const Regex& r);

// Node builders (for programmatic construction).
Regex regex_empty();
Regex regex_epsilon();
Regex regex_letter(Letter c);
Regex regex_concat(Regex a, Regex b);
Regex regex_union(Regex a, Regex b);
Regex regex_intersect(Regex a, Regex b);
Regex regex_difference(Regex a, Regex b);
Regex regex_star(Regex a);
Regex regex_plus(Regex a);
Regex regex_optional(Regex a);
Regex regex_shuffle(Regex a, Letter c);

// Reverses word order and exchanges '<' with '>'.  Throws on expressions
// containing synchronisation marks, whose mirror image is undefined.
Regex regex_mirror(const Regex& r);

// Compiles to the automaton kernel.  The alphabet is the three signature
// letters plus any synchronisation marks the expression uses.
Kernel regex_compile(const Regex& r);
Kernel regex_compile(const std::string& text);

}  // namespace slidets
