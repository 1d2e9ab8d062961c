// Finite-automaton kernel: the closed algebra of regular word sets that the
// pattern classifier reasons with.  Every public operation returns a kernel
// in canonical form, so two kernels describe the same language exactly when
// they compare equal structurally.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slidets/letters.hpp"

namespace slidets {

struct Arc {
  int from = 0;
  Letter letter = 0;
  int to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A nondeterministic automaton over an explicit alphabet.  States are
// 0..num_states-1; several source (initial) and sink (accepting) states are
// allowed.  The alphabet is carried separately from the arcs because
// complementation needs the full universe, not just the letters in use.
//
// Canonical form (produced by normalize()): a trim, minimal, deterministic
// automaton with a single source numbered 0, states numbered in
// breadth-first order following arcs in letter order, and arcs sorted.
// The empty language has zero states; the language {epsilon} is one state
// that is both source and sink, with no arcs.
struct Kernel {
  int num_states = 0;
  std::vector<Letter> alphabet;  // sorted, unique
  std::vector<int> sources;      // sorted
  std::vector<int> sinks;        // sorted
  std::vector<Arc> arcs;         // sorted, unique

  friend bool operator==(const Kernel&, const Kernel&) = default;
};

// --- constructors -----------------------------------------------------------

Kernel kernel_empty(std::vector<Letter> alphabet);
Kernel kernel_epsilon(std::vector<Letter> alphabet);
// Chain automaton for one word; alphabet defaults to the word's letters.
Kernel kernel_word(const Word& w, std::vector<Letter> alphabet = {});
// Union of single-letter words.
Kernel kernel_letters(const std::vector<Letter>& letters);
// Union of the given words.
Kernel kernel_words(const std::vector<Word>& words,
                    std::vector<Letter> alphabet = {});

// --- canonical form ---------------------------------------------------------

// Determinize, trim, minimize, renumber.  Idempotent.
Kernel normalize(const Kernel& k);

// --- the algebra ------------------------------------------------------------

Kernel kernel_union(const Kernel& a, const Kernel& b);
Kernel kernel_intersect(const Kernel& a, const Kernel& b);
// Words over the union of the two alphabets accepted by a but not b.
Kernel kernel_difference(const Kernel& a, const Kernel& b);
// Complement relative to a's own alphabet.
Kernel kernel_complement(const Kernel& a);
Kernel kernel_concat(const Kernel& a, const Kernel& b);
Kernel kernel_star(const Kernel& a);
Kernel kernel_plus(const Kernel& a);
Kernel kernel_optional(const Kernel& a);
// { u c v : u v in L(a) } — every word of a with one extra letter c inserted
// at an arbitrary position.
Kernel kernel_shuffle(const Kernel& a, Letter c);
// Word reversal.
Kernel kernel_reverse(const Kernel& a);
// Letter substitution (must be a bijection on a's alphabet).
Kernel kernel_relabel(const Kernel& a, const std::map<Letter, Letter>& sub);

// First letters of nonempty words of the language (a set of one-letter words).
Kernel kernel_truncate1(const Kernel& a);
// Last letters of nonempty words of the language.
Kernel kernel_tail1(const Kernel& a);
// All prefixes (including epsilon) of words of the language.
Kernel kernel_prefixes(const Kernel& a);
// All suffixes (including epsilon) of words of the language.
Kernel kernel_suffixes(const Kernel& a);

// --- queries ----------------------------------------------------------------

bool kernel_is_empty(const Kernel& a);
bool kernel_contains_epsilon(const Kernel& a);
bool kernel_accepts(const Kernel& a, const Word& w);
// Length of a shortest accepted word, or nullopt for the empty language.
std::optional<int> kernel_shortest_length(const Kernel& a);
// True when both kernels accept the same words.
bool kernel_same_language(const Kernel& a, const Kernel& b);

// All accepted words of length <= max_len, shortest first and in letter
// order within each length.  When max_len is negative the cap is taken from
// the SLIDETS_MAX_ENUM_LEN environment variable (default 8).
std::vector<Word> kernel_enumerate(const Kernel& a, int max_len = -1);

// Graphviz rendering of the canonical automaton.
std::string kernel_to_dot(const Kernel& a, const std::string& name = "kernel");

// --- deterministic transition table -----------------------------------------

// Dense DFA view of a canonical kernel, used by the linear-time scanners.
// State 0 is the start state unless the automaton is empty.  Missing
// transitions are -1.
struct DfaTable {
  int num_states = 0;                 // 0 for the empty language
  std::vector<Letter> alphabet;
  std::vector<std::vector<int>> next; // next[state][letter_index]
  std::vector<bool> accepting;
  bool accepts_epsilon = false;

  int letter_index(Letter c) const;
  int step(int state, Letter c) const;  // -1 once dead
};

DfaTable make_dfa_table(const Kernel& canonical);

}  // namespace slidets
